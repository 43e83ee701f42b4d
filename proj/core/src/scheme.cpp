#include "bic/scheme.hpp"

#include <stdexcept>

namespace bic {

namespace {
void validate_set(const ChannelParams& p, unsigned T,
                  const std::array<unsigned, 3>& dims,
                  const std::vector<std::array<Matrix, 3>>& gens) {
  if (gens.size() != p.M)
    throw std::invalid_argument("scheme needs one generator set per subcarrier");
  for (const auto& per_sub : gens) {
    for (int c = 0; c < 3; ++c) {
      const Matrix& g = per_sub[c];
      if (dims[c] == 0) {
        if (g.cols() != 0 && !g.is_zero())
          throw std::invalid_argument("nonzero generator for an empty class");
        continue;
      }
      if (g.rows() != p.q * T || g.cols() != dims[c])
        throw std::invalid_argument("generator shape mismatch");
      if (g.degree() != p.degree)
        throw std::invalid_argument("generator field mismatch");
    }
  }
}
}  // namespace

void LinearScheme::validate() const {
  if (T < 1) throw std::invalid_argument("need T >= 1");
  validate_set(params, T, dims, gens);
  if (other_gens) validate_set(params, T, dims, *other_gens);
}

}  // namespace bic
