from abc import ABC, abstractmethod

from gaps import build_gaps_col_form, build_gaps_row_form, ell_index
from sequences import gen_majorization_thresholds, prefix_sum


class Indicator(ABC):

    def __init__(self, context=None):
        self.context = context
        self.name = ""
        self.result = {}

    @abstractmethod
    def analyze(self):
        pass

    def get_result(self):
        return self.result

    def publish(self, **values):
        self.result.update(values)
        self.context.witness.update(values)


class RowFormGapIndicator(Indicator):

    def __init__(self, context=None):
        super(RowFormGapIndicator, self).__init__(context=context)
        self.name = "gaps (row form)"

    def analyze(self):
        ctx = self.context
        a, b = build_gaps_row_form(ctx.phi, ctx.gamma, ctx.u, ctx.target_rows, ctx.x, ctx.z, ctx.degree)
        self.publish(a=a, b=b)
        if ctx.target_rows is not None and b:
            self.publish(h_rows=gen_majorization_thresholds(ctx.target_rows, ctx.u, len(b)))
        if ctx.target_cols is not None and a:
            self.publish(h_cols=gen_majorization_thresholds(ctx.c, ctx.target_cols, len(a)))


class ColumnFormGapIndicator(Indicator):

    def __init__(self, context=None):
        super(ColumnFormGapIndicator, self).__init__(context=context)
        self.name = "gaps (column form)"

    def analyze(self):
        ctx = self.context
        a, b = build_gaps_col_form(ctx.phi, ctx.gamma, ctx.c, ctx.target_cols, ctx.x, ctx.z, ctx.degree)
        self.publish(a=a, b=b)
        if a:
            self.publish(h_cols=gen_majorization_thresholds(ctx.c, ctx.target_cols, len(a)))


class EllIndicator(Indicator):
    """First cut where the column indices of P outgrow the gap sequence a."""

    def __init__(self, context=None):
        super(EllIndicator, self).__init__(context=context)
        self.name = "ell"

    def analyze(self):
        self.publish(ell=ell_index(self.context.c, self.context.witness["a"]))


class HomOnlyEllIndicator(Indicator):

    def __init__(self, context=None):
        super(HomOnlyEllIndicator, self).__init__(context=context)
        self.name = "ell (homogeneous factors only)"

    def analyze(self):
        ctx = self.context
        bound = ctx.gamma_degree()
        ell = next((j for j in range(1, ctx.x + 1)
                    if prefix_sum(ctx.c, j) > bound - ctx.lower_sum(j) - j * ctx.degree), ctx.x + 1)
        self.publish(ell=ell)
