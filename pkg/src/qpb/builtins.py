"""Built-in presentation sources: O(U(1)) and O_q(SU(2)) with structure maps."""

U1_SOURCE = """\
# Laurent polynomial Hopf algebra on a group-like generator t
algebra OU1
gen t charge 1
gen tinv charge -1
rel t tinv = 1
rel tinv t = 1
delta t = (t) (x) (t)
delta tinv = (tinv) (x) (tinv)
eps t = 1
eps tinv = 1
antipode t = tinv
antipode tinv = t
"""

# Generator listing order gamma* < gamma < alpha < alpha* makes plain
# degree-lex orient all seven defining relations toward the standard
# monomial basis {alpha^i gamma^j gamma*^k} u {alpha*^i gamma^j gamma*^k}.
SUQ2_SOURCE = """\
algebra OqSU2
gen gamma* charge -1
gen gamma charge 1
gen alpha charge 1
gen alpha* charge -1
rel alpha gamma = q gamma alpha
rel alpha gamma* = q gamma* alpha
rel gamma gamma* = gamma* gamma
rel alpha* gamma = q^-1 gamma alpha*
rel alpha* gamma* = q^-1 gamma* alpha*
rel alpha* alpha = 1 - gamma* gamma
rel alpha alpha* = 1 - q^2 gamma gamma*
delta alpha = (alpha) (x) (alpha) - q (gamma*) (x) (gamma)
delta gamma = (gamma) (x) (alpha) + (alpha*) (x) (gamma)
delta gamma* = (alpha) (x) (gamma*) + (gamma*) (x) (alpha*)
delta alpha* = (alpha*) (x) (alpha*) - q (gamma) (x) (gamma*)
eps alpha = 1
eps alpha* = 1
eps gamma = 0
eps gamma* = 0
antipode alpha = alpha*
antipode alpha* = alpha
antipode gamma = - q gamma
antipode gamma* = - q^-1 gamma*
antipodeinv alpha = alpha*
antipodeinv alpha* = alpha
antipodeinv gamma = - q^-1 gamma
antipodeinv gamma* = - q gamma*
"""

# Circle coaction on O_q(SU(2)): charge +1 legs on alpha, gamma.
PODLES_COACTION = """\
delta alpha = (alpha) (x) (t)
delta gamma = (gamma) (x) (t)
delta gamma* = (gamma*) (x) (tinv)
delta alpha* = (alpha*) (x) (tinv)
"""
