#include "wulff/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wulff/parallel.hpp"

namespace wulff {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

// Philox 4x32-10 block function (Salmon et al. construction).
void philox_block(std::uint64_t counter_lo, std::uint64_t counter_hi,
                  std::uint32_t k0, std::uint32_t k1, std::uint32_t out[4]) {
  std::uint32_t c0 = static_cast<std::uint32_t>(counter_lo);
  std::uint32_t c1 = static_cast<std::uint32_t>(counter_lo >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(counter_hi);
  std::uint32_t c3 = static_cast<std::uint32_t>(counter_hi >> 32);
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c0, hi0, lo0);
    mulhilo(kPhiloxM1, c2, hi1, lo1);
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    const std::uint32_t n3 = lo0;
    c0 = n0; c1 = n1; c2 = n2; c3 = n3;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  out[0] = c0; out[1] = c1; out[2] = c2; out[3] = c3;
}

}  // namespace

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t sample_index)
    : sample_(sample_index) {
  key_[0] = static_cast<std::uint32_t>(seed);
  key_[1] = static_cast<std::uint32_t>(seed >> 32);
}

void PhiloxStream::refill() {
  philox_block(draw_++, sample_, key_[0], key_[1], buf_);
  avail_ = 4;
}

std::uint64_t PhiloxStream::next_u64() {
  if (avail_ < 2) refill();
  const std::uint64_t lo = buf_[4 - avail_];
  const std::uint64_t hi = buf_[5 - avail_];
  avail_ -= 2;
  return lo | (hi << 32);
}

double PhiloxStream::next_double() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

namespace {

constexpr long long kStepCap = 100000000;  // hard liveness bound per walk

struct Moments {
  unsigned long long sum = 0;
  unsigned __int128 sum_sq = 0;
  long long truncated = 0;
};

// Geometric lifetime with P(xi >= k) = m^k from a single uniform.
long long draw_lifetime(PhiloxStream& rng, double m, double log_m,
                        Moments& acc) {
  if (m == 0) return 0;
  const double u = rng.next_double();
  const double raw = std::floor(std::log(u) / log_m);
  if (!(raw < static_cast<double>(kStepCap))) {
    ++acc.truncated;
    return kStepCap;
  }
  return static_cast<long long>(raw);
}

McEstimate finalize(const Moments& mo, long long n, std::uint64_t seed,
                    McEstimate::Statistic stat) {
  McEstimate est;
  est.n_samples = n;
  est.seed = seed;
  est.statistic = stat;
  est.n_truncated = mo.truncated;
  const long double s1 = static_cast<long double>(mo.sum);
  const long double s2 = static_cast<long double>(mo.sum_sq);
  est.mean = static_cast<double>(s1 / n);
  if (n > 1) {
    long double var = (s2 - s1 * s1 / n) / (n - 1);
    if (var < 0) var = 0;
    est.std_error = static_cast<double>(std::sqrt(var / n));
  }
  return est;
}

template <class Body>
McEstimate run_samples(LatticePoint x, double m, long long n_samples,
                       std::uint64_t seed, McEstimate::Statistic stat,
                       Body body) {
  if (!(m >= 0 && m < 1))
    throw std::domain_error("montecarlo: need 0 <= m < 1 (lifetime must be finite)");
  if (n_samples < 1)
    throw std::domain_error("montecarlo: need n_samples >= 1");

  const double log_m = (m > 0) ? std::log(m) : 0.0;
  constexpr long long kChunk = 8192;
  const long long n_chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<Moments> partial(n_chunks);

  parallel_for(n_chunks, [&](std::int64_t c) {
    Moments mo;
    const long long lo = c * kChunk;
    const long long hi = std::min(lo + kChunk, n_samples);
    for (long long i = lo; i < hi; ++i) {
      PhiloxStream rng(seed, static_cast<std::uint64_t>(i));
      const long long life = draw_lifetime(rng, m, log_m, mo);
      const unsigned long long v = body(rng, x, life);
      mo.sum += v;
      mo.sum_sq += static_cast<unsigned __int128>(v) * v;
    }
    partial[c] = mo;
  });

  Moments total;
  for (const Moments& mo : partial) {
    total.sum += mo.sum;
    total.sum_sq += mo.sum_sq;
    total.truncated += mo.truncated;
  }
  return finalize(total, n_samples, seed, stat);
}

}  // namespace

McEstimate simulate_visits(LatticePoint x, double m, long long n_samples,
                           std::uint64_t seed) {
  return run_samples(
      x, m, n_samples, seed, McEstimate::Statistic::visits,
      [](PhiloxStream& rng, LatticePoint target, long long life) {
        long long px = 0, py = 0;
        unsigned long long visits = (target.x1 == 0 && target.x2 == 0) ? 1 : 0;
        for (long long step = 0; step < life; ++step) {
          switch (rng.next_u64() & 3u) {
            case 0: ++px; break;
            case 1: --px; break;
            case 2: ++py; break;
            default: --py; break;
          }
          if (px == target.x1 && py == target.x2) ++visits;
        }
        return visits;
      });
}

McEstimate simulate_hit(LatticePoint x, double m, long long n_samples,
                        std::uint64_t seed) {
  if (x.x1 == 0 && x.x2 == 0)
    throw std::domain_error("simulate_hit: x must be nonzero");
  return run_samples(
      x, m, n_samples, seed, McEstimate::Statistic::hit,
      [](PhiloxStream& rng, LatticePoint target, long long life) {
        long long px = 0, py = 0;
        for (long long step = 0; step < life; ++step) {
          switch (rng.next_u64() & 3u) {
            case 0: ++px; break;
            case 1: --px; break;
            case 2: ++py; break;
            default: --py; break;
          }
          if (px == target.x1 && py == target.x2)
            return static_cast<unsigned long long>(1);
        }
        return static_cast<unsigned long long>(0);
      });
}

}  // namespace wulff
