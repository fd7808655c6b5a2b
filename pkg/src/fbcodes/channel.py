"""AWGN forward channel, noisy/delayed feedback link, and session loop.

Conventions used throughout the workbench:

* SNR (dB) refers to the forward noise variance via
  ``snr = -10 log10(sigma^2)`` with unit average signal power.
* The feedback link adds independent Gaussian noise of variance
  ``sigma2_fb`` (``0.0`` means exactly noiseless: no noise is sampled).
* Under unit delay the feedback of transmission ``i`` is available to the
  encoder from transmission ``i+1`` on; under block delay it is available
  only after ``K`` further channel uses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

__all__ = [
    "BitBlock",
    "BurstyNoise",
    "ChannelConfig",
    "SessionTrace",
    "CausalityError",
    "RateMismatchError",
    "FeedbackWindow",
    "snr_to_variance",
    "variance_to_snr",
    "bpsk",
    "transmit",
    "feedback",
    "run_session",
]


class CausalityError(RuntimeError):
    """Encoder asked for feedback that has not been delivered yet."""


class RateMismatchError(ValueError):
    """Encoder and decoder disagree on block/codeword lengths."""


def snr_to_variance(snr_db: float) -> float:
    """Noise variance for a given SNR in dB (unit signal power)."""
    return float(10.0 ** (-snr_db / 10.0))


def variance_to_snr(sigma2: float) -> float:
    return float(-10.0 * np.log10(sigma2))


@dataclass(frozen=True)
class BitBlock:
    """A block of K information bits plus zero-padding metadata."""

    bits: np.ndarray
    padded_len: int

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=np.float64)
        if b.ndim != 1:
            raise ValueError("bits must be a 1-D vector")
        if not np.all((b == 0.0) | (b == 1.0)):
            raise ValueError("bits must be exactly 0 or 1")
        if self.padded_len < b.size:
            raise ValueError("padded_len must be >= number of information bits")
        object.__setattr__(self, "bits", b)

    @property
    def k(self) -> int:
        return int(self.bits.size)

    def padded(self) -> np.ndarray:
        """Bits with trailing zeros appended up to padded_len."""
        out = np.zeros(self.padded_len, dtype=np.float64)
        out[: self.k] = self.bits
        return out


@dataclass(frozen=True)
class BurstyNoise:
    """Two-component Gaussian noise: background plus Bernoulli(alpha) bursts."""

    alpha: float
    sigma2_bg: float
    sigma2_burst: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must be in [0, 1]")
        if self.sigma2_bg < 0 or self.sigma2_burst < 0:
            raise ValueError("variances must be nonnegative")

    @property
    def total_variance(self) -> float:
        return self.sigma2_bg + self.alpha * self.sigma2_burst


def bursty_from_total(alpha: float, sigma2_burst: float, sigma2_total: float) -> BurstyNoise:
    """Bursty parameters with background chosen to preserve total power."""
    bg = sigma2_total - alpha * sigma2_burst
    if bg < 0:
        raise ValueError("alpha * sigma2_burst exceeds the total noise power")
    return BurstyNoise(alpha=alpha, sigma2_bg=bg, sigma2_burst=sigma2_burst)


@dataclass(frozen=True)
class ChannelConfig:
    """Immutable description of the forward and feedback links."""

    sigma2_fwd: float
    sigma2_fb: float = 0.0
    delay: str = "unit"  # "unit" | "block"
    bursty: Optional[BurstyNoise] = None

    def __post_init__(self):
        if self.sigma2_fwd <= 0:
            raise ValueError("sigma2_fwd must be positive")
        if self.sigma2_fb < 0:
            raise ValueError("sigma2_fb must be nonnegative")
        if self.delay not in ("unit", "block"):
            raise ValueError("delay must be 'unit' or 'block'")
        if self.bursty is not None:
            tot = self.bursty.total_variance
            if abs(tot - self.sigma2_fwd) > 1e-9 * max(1.0, self.sigma2_fwd):
                raise ValueError(
                    f"bursty total power {tot:g} must equal sigma2_fwd {self.sigma2_fwd:g}"
                )

    @property
    def noiseless_fb(self) -> bool:
        return self.sigma2_fb == 0.0


@dataclass
class SessionTrace:
    """Full record of one encode/transmit/decode session."""

    x: np.ndarray
    y: np.ndarray
    y_fb: np.ndarray
    noise_fwd: np.ndarray
    noise_fb: np.ndarray

    @property
    def n(self) -> int:
        return int(self.x.size)

    def mean_power(self) -> float:
        return float(np.mean(self.x**2))


def bpsk(bits: np.ndarray) -> np.ndarray:
    """Map bits {0,1} elementwise to symbols {-1,+1} via 2b-1."""
    return 2.0 * np.asarray(bits, dtype=np.float64) - 1.0


def sample_forward_noise(cfg: ChannelConfig, shape, rng: np.random.Generator) -> np.ndarray:
    """Draw forward noise, either plain Gaussian or the bursty mixture."""
    if cfg.bursty is None:
        return rng.normal(0.0, np.sqrt(cfg.sigma2_fwd), size=shape)
    b = cfg.bursty
    base = rng.normal(0.0, np.sqrt(b.sigma2_bg), size=shape) if b.sigma2_bg > 0 else np.zeros(shape)
    burst = rng.normal(0.0, np.sqrt(b.sigma2_burst), size=shape)
    hits = rng.random(size=shape) < b.alpha
    return base + np.where(hits, burst, 0.0)


def sample_feedback_noise(cfg: ChannelConfig, shape, rng: np.random.Generator) -> np.ndarray:
    if cfg.sigma2_fb == 0.0:
        return np.zeros(shape)
    return rng.normal(0.0, np.sqrt(cfg.sigma2_fb), size=shape)


def transmit(x: np.ndarray, cfg: ChannelConfig, rng: np.random.Generator):
    """Send symbols over the forward link: returns (y, noise)."""
    x = np.asarray(x, dtype=np.float64)
    noise = sample_forward_noise(cfg, x.shape, rng)
    return x + noise, noise


def feedback(y: np.ndarray, cfg: ChannelConfig, rng: np.random.Generator) -> np.ndarray:
    """Return the transmitter-side view of the received symbols."""
    y = np.asarray(y, dtype=np.float64)
    return y + sample_feedback_noise(cfg, y.shape, rng)


class FeedbackWindow:
    """Causal read access to the feedback stream during a session.

    ``window[i]`` returns the feedback for transmission ``i`` (0-based) and
    raises :class:`CausalityError` unless that symbol has been released by
    the configured delay.
    """

    def __init__(self, values: np.ndarray, delay_steps: int):
        self._values = values
        self._delay = int(delay_steps)
        self._now = 0  # index of the transmission currently being formed

    def advance(self, now: int):
        self._now = now

    @property
    def delay(self) -> int:
        return self._delay

    def available(self, i: int) -> bool:
        return 0 <= i <= self._now - self._delay

    def __getitem__(self, i: int) -> float:
        if not self.available(i):
            raise CausalityError(
                f"feedback {i} requested while forming transmission {self._now} "
                f"(delay {self._delay})"
            )
        return float(self._values[i])


def run_session(
    encoder,
    decoder,
    cfg: ChannelConfig,
    bits: BitBlock,
    rng: np.random.Generator,
):
    """Drive one block through the interactive channel.

    ``encoder`` must provide ``codeword_length(block) -> int`` and
    ``emit(block, i, window) -> float`` producing the i-th symbol using
    only feedback exposed by ``window``.  ``decoder`` must provide
    ``decode(block_len_k, y) -> bits_hat``.

    Returns ``(bits_hat, SessionTrace)``.
    """
    n = int(encoder.codeword_length(bits))
    dec_n = getattr(decoder, "expected_length", None)
    if dec_n is not None and dec_n(bits) != n:
        raise RateMismatchError(
            f"encoder emits {n} symbols but decoder expects {dec_n(bits)}"
        )

    # The channel realization is drawn up front (noise is independent of the
    # transmitted symbols); causality is enforced on the encoder's access to
    # the feedback values, which do depend on its own past transmissions.
    noise_fwd = sample_forward_noise(cfg, n, rng)
    noise_fb = sample_feedback_noise(cfg, n, rng)

    x = np.zeros(n)
    y = np.zeros(n)
    y_fb = np.zeros(n)
    delay_steps = 1 if cfg.delay == "unit" else bits.k
    window = FeedbackWindow(y_fb, delay_steps)
    for i in range(n):
        window.advance(i)
        x[i] = encoder.emit(bits, i, window)
        y[i] = x[i] + noise_fwd[i]
        y_fb[i] = y[i] + noise_fb[i]

    bits_hat = decoder.decode(bits.k, y)
    trace = SessionTrace(x=x, y=y, y_fb=y_fb, noise_fwd=noise_fwd, noise_fb=noise_fb)
    return bits_hat, trace
