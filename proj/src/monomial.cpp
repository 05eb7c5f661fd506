#include "beilab/monomial.hpp"

#include <algorithm>

#include "beilab/errors.hpp"

namespace beilab {

std::string to_string(Monomial m, int n) {
  std::string out;
  for (std::uint64_t rest = m.support(); rest; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    if (!out.empty()) out += '*';
    out += bit < n ? "x" + std::to_string(bit + 1) : "y" + std::to_string(bit - n + 1);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](Monomial a, Monomial b) {
    return std::pair(a.degree(), a.support()) < std::pair(b.degree(), b.support());
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial g : gens)
    if (std::none_of(kept.begin(), kept.end(), [g](Monomial k) { return k.divides(g); })) kept.push_back(g);
  return kept;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > 64) throw SizeError("monomial ideals support at most 64 variables");
  const std::uint64_t ambient = num_vars == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << num_vars) - 1);
  for (Monomial g : generators) {
    if (g.support() == 0) throw PreconditionError("the unit monomial is not a valid generator");
    if (g.support() & ~ambient) throw PreconditionError("generator uses a variable outside the ambient ring");
  }
  gens_ = minimalize(std::move(generators));
}

std::uint64_t MonomialIdeal::effective_support() const {
  std::uint64_t s = 0;
  for (Monomial g : gens_) s |= g.support();
  return s;
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw PreconditionError("ideals live in different rings");
  std::vector<Monomial> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(all));
}

std::string to_string(const MonomialIdeal& ideal, int n) {
  std::string out = "(";
  for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
    if (k) out += ", ";
    out += to_string(ideal.generators()[k], n);
  }
  return out + ")";
}

}  // namespace beilab
