# Frozen Magnus-matrix orientation, chosen by fox.select_magnus_convention().
# Block (i, j) holds rho(bar(d phi(x_j) / d x_i)): rows are indexed by the
# differentiated variable and the bar involution g -> g^-1 is applied.
MAGNUS_BAR = True
MAGNUS_ROWS = "variable"

# Long-Moody block layout, chosen by longmoody.select_induction_convention():
# block (i, j) = beta(b) rho(d(tau(b)^-1 x_i) / d x_j), no bar.
INDUCTION_BAR = False
INDUCTION_ROWS = "image"
