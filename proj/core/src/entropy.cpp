#include "bic/entropy.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bic/rng.hpp"

namespace bic {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kChainSlack = 1e-9;

std::size_t product_size(const std::vector<unsigned>& alphabet) {
  std::size_t s = 1;
  for (unsigned a : alphabet) {
    if (a < 1) throw std::invalid_argument("alphabet sizes must be >= 1");
    s *= a;
  }
  return s;
}

double entropy_of(const std::vector<double>& probs) {
  double h = 0.0;
  for (double v : probs)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

}  // namespace

std::size_t JointPMF::table_size() const { return product_size(alphabet); }

JointPMF JointPMF::from_table(std::vector<unsigned> alphabet, std::vector<double> p) {
  const std::size_t size = product_size(alphabet);
  if (p.size() != size) throw std::invalid_argument("pmf table size mismatch");
  double mass = 0.0;
  for (double v : p) {
    if (v < 0.0) throw std::invalid_argument("negative probability");
    mass += v;
  }
  if (std::abs(mass - 1.0) > kMassTolerance)
    throw std::invalid_argument("pmf mass differs from 1 beyond 1e-12");
  return JointPMF{std::move(alphabet), std::move(p)};
}

JointPMF JointPMF::from_rational_table(std::vector<unsigned> alphabet,
                                       const std::vector<Rational>& p) {
  const std::size_t size = product_size(alphabet);
  if (p.size() != size) throw std::invalid_argument("pmf table size mismatch");
  Rational mass(0);
  for (const Rational& v : p) {
    if (v.sign() < 0) throw std::invalid_argument("negative probability");
    mass += v;
  }
  if (mass != Rational(1)) throw std::invalid_argument("rational pmf must sum to 1 exactly");
  std::vector<double> d(size);
  for (std::size_t i = 0; i < size; ++i) d[i] = p[i].to_double();
  return JointPMF{std::move(alphabet), std::move(d)};
}

double marginal_entropy(const JointPMF& pmf, const std::vector<unsigned>& vars) {
  const unsigned M = pmf.var_count();
  for (unsigned v : vars)
    if (v >= M) throw std::invalid_argument("variable index out of range");
  std::size_t sub_size = 1;
  for (unsigned v : vars) sub_size *= pmf.alphabet[v];
  std::vector<double> marg(sub_size, 0.0);

  const std::size_t total = pmf.table_size();
  std::vector<unsigned> digits(M, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t key = 0;
    for (unsigned v : vars) key = key * pmf.alphabet[v] + digits[v];
    marg[key] += pmf.p[idx];
    for (unsigned v = M; v-- > 0;) {  // mixed-radix increment, last fastest
      if (++digits[v] < pmf.alphabet[v]) break;
      digits[v] = 0;
    }
  }
  return entropy_of(marg);
}

double joint_entropy(const JointPMF& pmf) { return entropy_of(pmf.p); }

double window_entropy_sum(const JointPMF& pmf, unsigned w) {
  const unsigned M = pmf.var_count();
  if (w < 1 || w > M) throw std::invalid_argument("window size must be in 1..M");
  double sum = 0.0;
  for (unsigned start = 0; start < M; ++start) {
    std::vector<unsigned> vars(w);
    for (unsigned i = 0; i < w; ++i) vars[i] = (start + i) % M;
    sum += marginal_entropy(pmf, vars);
  }
  return sum;
}

SlidingWindowResult sliding_window_check(const JointPMF& pmf) {
  const unsigned M = pmf.var_count();
  if (M < 2) throw std::invalid_argument("need at least 2 variables");
  SlidingWindowResult res;
  res.chain.resize(M);
  for (unsigned w = 1; w <= M; ++w)
    res.chain[w - 1] = window_entropy_sum(pmf, w) / static_cast<double>(w);
  res.holds = true;
  for (unsigned w = 1; w < M; ++w)
    res.holds = res.holds && res.chain[w] <= res.chain[w - 1] + kChainSlack;
  return res;
}

JointPMF random_pmf(const std::vector<unsigned>& alphabet, std::uint64_t seed) {
  const std::size_t size = product_size(alphabet);
  if (size > 10000) throw std::invalid_argument("product alphabet capped at 10^4");
  SplitMix64 rng(seed);
  std::vector<double> p(size);
  double mass = 0.0;
  for (auto& v : p) {
    double u = rng.unit();
    if (u <= 0.0) u = 0x1.0p-53;
    v = -std::log(u);  // Exp(1), so the normalized vector is Dirichlet(1,...,1)
    mass += v;
  }
  for (auto& v : p) v /= mass;
  return JointPMF{alphabet, std::move(p)};
}

JointPMF parse_pmf_text(std::istream& in) {
  std::string line;
  std::vector<unsigned> alphabet;
  std::vector<double> table;
  bool have_sizes = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_sizes) {
      if (first != "sizes")
        throw std::invalid_argument("pmf file must start with a 'sizes' line");
      unsigned a;
      while (ls >> a) alphabet.push_back(a);
      if (alphabet.empty()) throw std::invalid_argument("empty 'sizes' line");
      table.assign(product_size(alphabet), 0.0);
      have_sizes = true;
      continue;
    }
    std::vector<unsigned> digits(alphabet.size());
    digits[0] = std::stoul(first);
    for (std::size_t i = 1; i < alphabet.size(); ++i)
      if (!(ls >> digits[i]))
        throw std::invalid_argument("short index tuple on line " + std::to_string(lineno));
    double prob;
    if (!(ls >> prob))
      throw std::invalid_argument("missing probability on line " + std::to_string(lineno));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (digits[i] >= alphabet[i])
        throw std::invalid_argument("index out of range on line " + std::to_string(lineno));
      idx = idx * alphabet[i] + digits[i];
    }
    table[idx] = prob;
  }
  if (!have_sizes) throw std::invalid_argument("empty pmf file");
  return JointPMF::from_table(std::move(alphabet), std::move(table));
}

}  // namespace bic
