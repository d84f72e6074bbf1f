#include "higgs/hitchin/experiment.hpp"

#include <algorithm>
#include <thread>

#include "higgs/arith/random.hpp"
#include "higgs/hitchin/sampling.hpp"
#include "higgs/spectral/irreducible.hpp"

namespace higgs::hitchin {

SampleResult analyse_sample(const TwistedEndo<Fp>& phi) {
  SampleResult out;
  out.rank = hitchin_differential(phi).rank();
  out.orbit_dim = spectral::end_dim(phi) - spectral::commutant_dim(phi);
  try {
    out.irreducible = spectral::is_irreducible(spectral::char_poly(phi));
  } catch (const PreconditionError&) {
    out.irreducible.reset();
  }
  return out;
}

RankExperiment run_rank_experiment(const SplittingType& st, int k, std::uint32_t p, std::uint64_t seed,
                                   int samples, int threads) {
  if (samples < 1) throw PreconditionError("rank experiment: samples must be at least 1");
  if (k < 1) throw PreconditionError("rank experiment: k must be positive");
  const PrimeField field(p);
  RankExperiment ex{.dims = expected_dims(st, k)};
  ex.prime = p;
  ex.seed = seed;
  ex.samples.resize(static_cast<std::size_t>(samples));

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < ex.samples.size(); i += step) {
      const std::uint64_t s = arith::derive_seed(seed, i);
      ex.samples[i] = analyse_sample(random_endo(st, k, field, s));
      ex.samples[i].seed = s;
    }
  };
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, samples));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }

  for (const auto& s : ex.samples) ex.max_rank = std::max(ex.max_rank, s.rank);
  ex.dominant = static_cast<std::int64_t>(ex.max_rank) == ex.dims.base_dim;
  ex.empirical_fiber_dim =
      ex.dims.end_twist_dim - (ex.dims.aut_dim - 1) - static_cast<std::int64_t>(ex.max_rank);
  return ex;
}

}  // namespace higgs::hitchin
