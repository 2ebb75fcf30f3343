import logging

logger = logging.getLogger(__name__)


class CompletionAnalysis:

    def __init__(self, theorem, context):
        self.theorem = theorem
        self.context = context
        self.indicators = []
        self.conditions = []
        self.condition_results = {}

    def add_indicator(self, indicator):
        self.indicators.append(indicator)

    def add_condition(self, condition):
        self.conditions.append(condition)

    def run(self):
        logger.info("Run Check: '%s'", self.theorem)
        self.run_indicator_analysis()
        self.run_condition_analysis()
        return self

    def run_indicator_analysis(self):
        logger.info("     Run Indicator Analysis...")
        for indicator in self.indicators:
            logger.debug("          %s", indicator.__class__.__name__)
            indicator.analyze()

    def run_condition_analysis(self):
        logger.info("     Run Condition Analysis...")
        for condition in self.conditions:
            valid = bool(condition.is_valid(self.context))
            logger.debug("          %s: %s", condition.name, "holds" if valid else "violated")
            self.condition_results[condition.name] = self.condition_results.get(condition.name, True) and valid

    @property
    def evaluated(self):
        return tuple(self.condition_results)

    @property
    def violations(self):
        return tuple(name for name, valid in self.condition_results.items() if not valid)

    @property
    def witness(self):
        return dict(getattr(self.context, "witness", {}))
