#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "beltrami.hpp"
#include "hopf.hpp"
#include "linearized.hpp"

namespace dkp {

// Cached access to the per-k solver chain (Hopf -> Beltrami -> linearized)
// for one fixed potential. Keys are k quantized to cfg.cache_quantum.
// Entries are immutable shared_ptrs behind a mutex; capacity is bounded
// (oldest entries are dropped first) so inversion sweeps with many distinct
// k values stay within a fixed memory budget.
class KPipeline {
 public:
  KPipeline(ComplexField u, SolverConfig cfg, std::size_t hopf_capacity = 48,
            std::size_t stage_capacity = 8);

  const ComplexField& u() const { return u_; }
  const SolverConfig& config() const { return cfg_; }
  double u_norm() const { return u_norm_; }

  std::shared_ptr<const HopfSolution> hopf(Complex k) const;
  std::shared_ptr<const BeltramiSolution> beltrami(Complex k) const;
  std::shared_ptr<const LinearizedSolution> linearized(Complex k) const;

 private:
  using Key = std::pair<long long, long long>;
  Key key_of(Complex k) const;

  template <class T>
  struct Cache {
    std::map<Key, std::shared_ptr<const T>> by_key;
    std::deque<Key> order;
    std::size_t capacity = 0;

    std::shared_ptr<const T> find(const Key& k) const {
      auto it = by_key.find(k);
      return it == by_key.end() ? nullptr : it->second;
    }
    void insert(const Key& k, std::shared_ptr<const T> v) {
      if (by_key.emplace(k, std::move(v)).second) {
        order.push_back(k);
        while (order.size() > capacity) {
          by_key.erase(order.front());
          order.pop_front();
        }
      }
    }
  };

  ComplexField u_;
  SolverConfig cfg_;
  double u_norm_ = 0.0;

  mutable std::mutex mutex_;
  mutable Cache<HopfSolution> hopf_cache_;
  mutable Cache<BeltramiSolution> beltrami_cache_;
  mutable Cache<LinearizedSolution> linearized_cache_;
};

}  // namespace dkp
