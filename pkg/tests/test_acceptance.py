"""The ten acceptance criteria, each at its full range with exact equality.

Each test prints one PASS/FAIL line (run with -s to see them; the summary
hook in conftest also collects them).
"""

from icefock import verify

RESULTS = []


def report(number, title, reports, detail=""):
    ok = all(r["status"] == "pass" for r in reports)
    checked = sum(c["checked"] for r in reports for c in r["checks"])
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title} ({checked} comparisons){detail}"
    print(line)
    RESULTS.append(line)
    failed = [c for r in reports for c in r["checks"] if c["status"] != "pass"]
    assert ok, failed[:3]


def test_criterion_01_delta_rows():
    report(1, "Delta row matrix = e^{H+(z)} matrix, n in 1..3, |lambda| <= 8", [verify.theorem_a_delta()])


def test_criterion_02_gamma_rows():
    report(2, "Gamma row matrix = bra e^{H-(z)} = sigma adjoint of Delta at 1/z, n in 1..3, |lambda| <= 8",
           [verify.theorem_a_gamma()])


def test_criterion_03_heisenberg():
    report(3, "[J_k, J_l] = delta_{k,-l} k (1 - v^{n|k|}) / (1 - v^{|k|}), k,l in +-1,+-2, degree <= 6",
           [verify.heisenberg_commutator()], "; J_k carries no twist parameter, Gauss symbols formal")


def test_criterion_04_hecke():
    report(4, "direct = R-matrix action, quadratic, braid, T y T = q^2 y, twisted YBE, n,N in 2..3",
           [verify.hecke_agree()], "; R-matrix z-index convention swapped relative to the printed display")


def test_criterion_05_llt():
    report(5, "LLT combinatorial = operator, symmetric, denominator-free; n=1 is Schur",
           [verify.llt_dual()], "; equality at g(a)=+q, default g(a)=-q gives q -> -q")


def test_criterion_06_metaplectic():
    report(6, "lattice = operator = super-LLT at (z^n | v z^n), n in 2..3, r in 1..2, |lambda| <= 9",
           [verify.metaplectic()], "; vs combinatorial super-LLT under the same sign convention as criterion 5")


def test_criterion_07_cauchy():
    report(7, "LLT Cauchy (delta empty and (1)) and metaplectic Cauchy, degree cap 6",
           [verify.cauchy_llt(), verify.cauchy_metaplectic()])


def test_criterion_08_commutation():
    report(8, "T_Delta(z) T_Gamma(w) = C(z,w) T_Gamma(w) T_Delta(z) and local analogues, order 6, n = 2",
           [verify.commutation()])


def test_criterion_09_tables():
    r = verify.tables()
    rows = [c for c in r["checks"] if "literal_rows" in c]
    per_n = ", ".join(
        f"n={c['range']['n']}: {c['literal_rows_reproduced']}/{c['literal_rows']} printed rows literal, "
        f"{len(c['misprints'])} pinned misprints" for c in rows
    )
    report(9, "hat transfer windows, wedge example, 3-ribbon statistic", [r],
           f"; four-term identity on every window; {per_n}; wedge value (v-1) not g(-3)")


def test_criterion_10_whittaker():
    report(10, "Whittaker decomposition n = 2, r = 2, xi in {(), (1)}, |lambda| <= 4, c(xi, sigma) lambda-free",
           [verify.whittaker_decomp()], "; star adds r to the first r parts")
