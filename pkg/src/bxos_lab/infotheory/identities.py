"""信息论恒等式与不等式的随机化校验"""

import math
import itertools
from dataclasses import field, dataclass

from loguru import logger

from .joint import JointDistribution
from .measures import entropy, mutual_info, divergences, tvd_max_events, expected_kl_form, conditional_entropy
from ..setcore import RngStream

TOLERANCE = 1e-9
VARIABLES = ("W", "X", "Y", "Z")


@dataclass(slots=True)
class IdentityCheck:
    name: str
    cases: int = 0
    failures: int = 0
    worst: float = 0.0
    """最大违反量 (残差或不等式两侧之差), 未违反时为最坏的余量"""

    def record(self, violation: float, tol: float = TOLERANCE) -> None:
        """violation > tol 视为失败"""
        self.cases += 1
        if self.cases == 1 or violation > self.worst:
            self.worst = violation
        if violation > tol:
            self.failures += 1


@dataclass(slots=True)
class IdentityReport:
    trials: int
    checks: dict[str, IdentityCheck] = field(default_factory=dict)

    def check(self, name: str) -> IdentityCheck:
        return self.checks.setdefault(name, IdentityCheck(name))

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks.values())

    @property
    def passed(self) -> bool:
        return self.failures == 0


def random_joint(rng: RngStream, names: tuple[str, ...] = VARIABLES, max_alphabet: int = 4) -> JointDistribution:
    """每个变量 2..max_alphabet 个取值, 权重为 [0, 1000] 上的均匀整数再归一化"""
    sizes = [int(s) for s in rng.integers(2, max_alphabet + 1, size=len(names))]
    keys = list(itertools.product(*(range(s) for s in sizes)))
    draws = [int(w) for w in rng.integers(0, 1001, size=len(keys))]
    if not any(draws):
        draws[0] = 1
    return JointDistribution.from_weights(names, dict(zip(keys, draws)))


def _entropy_facts(d: JointDistribution, report: IdentityReport) -> None:
    for name in d.names:
        h = entropy(d, name)
        report.check("entropy-bounds").record(max(-h, h - math.log2(len(d.marginal(name)))))
    h_wx = entropy(d, ("W", "X"))
    report.check("entropy-chain").record(abs(h_wx - entropy(d, "W") - conditional_entropy(d, "X", "W")))
    report.check("entropy-subadditivity").record(h_wx - entropy(d, "W") - entropy(d, "X"))
    report.check("conditioning-reduces-entropy").record(conditional_entropy(d, "X", "Y") - entropy(d, "X"))


def _mutual_info_facts(d: JointDistribution, rng: RngStream, report: IdentityReport) -> None:
    i_xy_z = mutual_info(d, "X", "Y", "Z")
    i_xy = mutual_info(d, "X", "Y")
    report.check("mi-nonnegative").record(-i_xy_z)
    report.check("mi-at-most-entropy").record(i_xy - min(entropy(d, "X"), entropy(d, "Y")))
    report.check("mi-symmetry").record(abs(i_xy_z - mutual_info(d, "Y", "X", "Z")))

    chain = mutual_info(d, ("W", "X"), "Y", "Z") - mutual_info(d, "W", "Y", "Z") - mutual_info(d, "X", "Y", ("W", "Z"))
    report.check("mi-chain-rule").record(abs(chain))

    ys = sorted(key[0] for key in d.marginal("Y").support)
    table = {y: int(v) for y, v in zip(ys, rng.integers(0, 3, size=len(ys)))}
    processed = d.derive("fY", table.__getitem__, "Y")
    report.check("data-processing").record(mutual_info(processed, "X", "fY", "Z") - i_xy_z)

    report.check("mi-expected-kl").record(abs(i_xy_z - expected_kl_form(d, "X", "Y", "Z")))

    bound = mutual_info(d, "W", "X", "Z") + mutual_info(d, "Y", "X", ("W", "Z"))
    lhs = max(mutual_info(d, "W", "X", ("Y", "Z")), mutual_info(d, "Y", "X", "Z"))
    report.check("mi-two-term-bound").record(lhs - bound)


def _independence_facts(d: JointDistribution, report: IdentityReport) -> None:
    product = d.marginal("X").product(d.marginal("Y"))
    report.check("independent-zero-mi").record(abs(mutual_info(product, "X", "Y")))
    report.check("independent-exact").record(0.0 if product.is_independent("X", "Y") else 1.0)
    # I = 0 当且仅当独立
    zero = mutual_info(d, "X", "Y") <= 1e-12
    report.check("zero-mi-iff-independent").record(0.0 if zero == d.is_independent("X", "Y") else 1.0)
    copied = d.marginal("X").derive("X'", lambda x: x, "X")
    report.check("self-information").record(abs(mutual_info(copied, "X", "X'") - entropy(d, "X")))


def _divergence_facts(d: JointDistribution, report: IdentityReport) -> None:
    z0 = d.marginal("Z").support[0]
    p = d.condition({"Z": z0[0]}).marginal("X")
    q = d.marginal("X")
    div = divergences(p, q)
    report.check("pinsker").record(float(div.tvd) - div.pinsker_bound)
    report.check("tvd-max-events").record(0.0 if tvd_max_events(p, q) == div.tvd else 1.0)


def index_joint(n: int, rng: RngStream) -> JointDistribution:
    """X_1..X_n 独立同分布二值, Y 独立, I 均匀独立, M = f(X, Y), XI = X_I"""
    bias = int(rng.integers(1, 10))
    y_weights = [int(w) for w in rng.integers(1, 11, size=3)]
    weights: dict[tuple, int] = {}
    for xs in itertools.product((0, 1), repeat=n):
        wx = math.prod(bias if x else 10 - bias for x in xs)
        for y, wy in enumerate(y_weights):
            for i in range(n):
                weights[(*xs, y, i)] = wx * wy
    names = (*(f"X{i}" for i in range(n)), "Y", "I")
    d = JointDistribution.from_weights(names, weights)

    xs_names = names[:n]
    inputs = [(*xs, y) for xs in itertools.product((0, 1), repeat=n) for y in range(3)]
    f = dict(zip(inputs, (int(v) for v in rng.integers(0, 4, size=len(inputs)))))
    d = d.derive("M", lambda *values: f[values], (*xs_names, "Y"))
    return d.derive("XI", lambda *values: values[values[n]], (*xs_names, "I"))


def _index_fact(n: int, rng: RngStream, report: IdentityReport) -> None:
    d = index_joint(n, rng)
    xs = [f"X{i}" for i in range(n)]
    lhs = mutual_info(d, "XI", "M", ("Y", "I"))
    rhs = mutual_info(d, xs, "M", "Y") / n
    report.check("index-information").record(lhs - rhs)


def verify_identities(trials: int, rng: RngStream) -> IdentityReport:
    """每次试验生成一个随机四变量联合分布并逐条校验, 另外对 n ∈ {2, 3} 构造指标信息的例子

    Args:
        trials: 试验次数
        rng: 随机流, 第 t 次试验使用 rng.spawn(t)

    Returns:
        IdentityReport: 每条恒等式的案例数, 失败数和最坏残差
    """
    report = IdentityReport(trials)
    for trial in range(trials):
        stream = rng.spawn(trial)
        d = random_joint(stream)
        _entropy_facts(d, report)
        _mutual_info_facts(d, stream, report)
        _independence_facts(d, report)
        _divergence_facts(d, report)
        _index_fact(2 + trial % 2, stream, report)

    for check in report.checks.values():
        if check.failures:
            logger.warning(f"{check.name}: {check.failures}/{check.cases} failures, worst {check.worst:.3e}")
    logger.info(f"verified {len(report.checks)} identities over {trials} trials, {report.failures} failures")
    return report
