from .period import (
    ShellContribution, PeriodReport,
    growth_counts, lambda_partial, lambda_closed, lambda_product_form, absolute_majorant,
    shell_contributions, geometric_lambda, period_report,
)
