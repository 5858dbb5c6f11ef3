import numpy as np

from bck_net.core import FieldMode, OutcomeKind, UndefinedArrowError

from .constants import ARROW_STREAM, HOP_STREAM, KILL_STREAM, RESAMPLE_STREAM

__all__: list[str] = ["OutcomeMixin"]


class OutcomeMixin:
    """Maps per-site variates to local outcomes.

    The arrow kind comes from one uniform U_a in both modes:
    BOTH if U_a < b, LEFT_ONLY if U_a < b + (1 - b) / 2, else RIGHT_ONLY.
    Layered mode marks a site as killing when U_k < k. Joint mode turns a
    non-branching site into KILL when U_k < k / (1 - b), which yields the
    marginals (b, k, (1-b-k)/2, (1-b-k)/2) and keeps kills monotone in k.
    """

    def kinds(self, xs, ts) -> np.ndarray:
        b = self.params.b
        u = self.uniforms(xs, ts, ARROW_STREAM)
        kinds = np.full(u.shape, OutcomeKind.RIGHT_ONLY, dtype=np.int8)
        kinds[u < b + (1.0 - b) / 2.0] = OutcomeKind.LEFT_ONLY
        kinds[u < b] = OutcomeKind.BOTH

        if self.params.mode == FieldMode.JOINT and self.params.k > 0.0:
            threshold = self.params.joint_kill_threshold
            killed = (kinds != OutcomeKind.BOTH) & (
                self.uniforms(xs, ts, KILL_STREAM) < threshold
            )
            kinds[killed] = OutcomeKind.KILL
        return kinds

    def kill_marks(self, xs, ts) -> np.ndarray:
        xs = np.atleast_1d(np.asarray(xs, dtype=np.int64))
        if self.params.mode == FieldMode.JOINT or self.params.k <= 0.0:
            return np.zeros(xs.shape, dtype=bool)
        return self.uniforms(xs, ts, KILL_STREAM) < self.params.k

    def latent_directions(self, xs, ts) -> np.ndarray:
        if not self.has_latent_arrows:
            raise UndefinedArrowError(
                "kill-site resampling is disabled for this environment"
            )
        u = self.uniforms(xs, ts, RESAMPLE_STREAM)
        return np.where(u < 0.5, -1, 1).astype(np.int8)

    def hop_uniforms(self, xs, ts) -> np.ndarray:
        return self.uniforms(xs, ts, HOP_STREAM)
