#include "pipeline.hpp"

#include <cmath>

namespace dkp {

KPipeline::KPipeline(ComplexField u, SolverConfig cfg, std::size_t hopf_capacity,
                     std::size_t stage_capacity)
    : u_(std::move(u)), cfg_(cfg) {
  cfg_.validate();
  u_norm_ = sobolev_norm(u_, cfg_.sobolev_order);
  hopf_cache_.capacity = hopf_capacity;
  beltrami_cache_.capacity = stage_capacity;
  linearized_cache_.capacity = stage_capacity;
}

KPipeline::Key KPipeline::key_of(Complex k) const {
  const double q = cfg_.cache_quantum;
  return {static_cast<long long>(std::llround(k.real() / q)),
          static_cast<long long>(std::llround(k.imag() / q))};
}

std::shared_ptr<const HopfSolution> KPipeline::hopf(Complex k) const {
  const Key key = key_of(k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto hit = hopf_cache_.find(key)) return hit;
  }
  auto sol = std::make_shared<HopfSolution>(
      solve_phi(u_, SpectralParam(k), cfg_));
  std::lock_guard<std::mutex> lock(mutex_);
  hopf_cache_.insert(key, sol);
  return sol;
}

std::shared_ptr<const BeltramiSolution> KPipeline::beltrami(Complex k) const {
  const Key key = key_of(k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto hit = beltrami_cache_.find(key)) return hit;
  }
  auto hs = hopf(k);
  auto sol = std::make_shared<BeltramiSolution>(
      solve_w(compute_q(hs->phi, hs->k), hs->k, cfg_));
  std::lock_guard<std::mutex> lock(mutex_);
  beltrami_cache_.insert(key, sol);
  return sol;
}

std::shared_ptr<const LinearizedSolution> KPipeline::linearized(Complex k) const {
  const Key key = key_of(k);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto hit = linearized_cache_.find(key)) return hit;
  }
  auto hs = hopf(k);
  auto bs = beltrami(k);
  auto sol = std::make_shared<LinearizedSolution>(solve_linearized(*hs, *bs, cfg_));
  std::lock_guard<std::mutex> lock(mutex_);
  linearized_cache_.insert(key, sol);
  return sol;
}

}  // namespace dkp
