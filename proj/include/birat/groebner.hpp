#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "birat/config.hpp"
#include "birat/poly.hpp"

namespace birat {

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements; // reduced: monic, autoreduced, sorted by LM ascending
};

// Shared-handle ideal with a per-order cache of reduced Groebner bases.
// Cache reads are concurrent, writes synchronized; duplicate computation is
// harmless because reduced bases are canonical.
class Ideal {
public:
  Ideal() = default;
  Ideal(CtxPtr ctx, std::vector<Polynomial> gens);
  static Ideal zero(CtxPtr ctx);
  static Ideal unit(CtxPtr ctx);

  const CtxPtr& ctx() const { return d_->ctx; }
  const std::vector<Polynomial>& gens() const { return d_->gens; }
  const GroebnerBasis& gb(const MonomialOrder& order, const Config& cfg) const;

  bool is_zero(const Config& cfg) const;
  bool is_unit(const Config& cfg) const; // contains 1
  bool contains(const Polynomial& p, const Config& cfg) const;

private:
  struct Data {
    CtxPtr ctx;
    std::vector<Polynomial> gens; // canonical grevlex representation
    std::map<std::string, GroebnerBasis> cache;
    std::mutex mtx;
  };
  std::shared_ptr<Data> d_;
};

// Buchberger with Gebauer-Moller pair pruning and sugar-degree selection.
// Deterministic: fixed tie-breaking by input order, then monomial order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const Config& cfg);

// Remainder with no term divisible by a leading monomial of gb; p - result
// lies in (gb). Optionally records quotients: p = sum q_i gb_i + result.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb,
                       std::vector<Polynomial>* quotients = nullptr);

// Generators of I intersected with k[keep], via a block elimination order.
// The result lives in the same ring.
Ideal elimination_ideal(const Ideal& I, const std::vector<size_t>& keep, const Config& cfg);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned r);
Ideal intersection(const Ideal& I, const Ideal& J, const Config& cfg);
Ideal colon(const Ideal& I, const Ideal& J, const Config& cfg);
// Stable ideal I : J^inf plus the first exponent e with I : J^e = I : J^(e+1).
std::pair<Ideal, unsigned> saturate(const Ideal& I, const Ideal& J, const Config& cfg);

// Kernel of k[target_names] -> k[X]/a, Y_j -> forms[j]; result in a fresh ring.
Ideal kernel_of_map(const std::vector<Polynomial>& forms, const Ideal& source_ideal,
                    const std::vector<std::string>& target_names, const Config& cfg);

// Krull dimension of the quotient ring, combinatorial from leading terms.
size_t krull_dimension(const Ideal& I, const Config& cfg); // UnitIdeal if improper

bool ideal_equal(const Ideal& I, const Ideal& J, const Config& cfg);

// Minimal homogeneous generating set by degree-ascending greedy selection.
std::vector<Polynomial> minimal_generators(std::vector<Polynomial> gens, const Config& cfg);

// Context plumbing for auxiliary-variable constructions.
CtxPtr extend_context(const CtxPtr& ctx, const std::vector<std::string>& extra,
                      std::optional<size_t> block_split);
Polynomial map_to_context(const Polynomial& p, const CtxPtr& target,
                          const std::vector<size_t>& var_map, const MonomialOrder& order);

} // namespace birat
