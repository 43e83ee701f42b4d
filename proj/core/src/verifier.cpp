#include "bic/verifier.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

namespace bic {

const char* decode_class_name(DecodeClass c) {
  switch (c) {
    case DecodeClass::all_interfered: return "all-interfered";
    case DecodeClass::exactly_l: return "exactly-l";
    case DecodeClass::interference_free: return "interference-free";
  }
  return "?";
}

std::vector<MsgClass> required_messages(DecodeClass c) {
  switch (c) {
    case DecodeClass::all_interfered: return {MsgClass::wm};
    case DecodeClass::exactly_l: return {MsgClass::wl, MsgClass::wm};
    case DecodeClass::interference_free:
      return {MsgClass::w0, MsgClass::wl, MsgClass::wm};
  }
  return {};
}

namespace {

// I_T (x) G^s: per-slot down shift acting on (q*T)-row generators.
Matrix block_shift(const ChannelParams& p, unsigned T, unsigned s) {
  Matrix d(p.q * T, p.q * T, p.degree);
  for (unsigned t = 0; t < T; ++t)
    for (unsigned r = s; r < p.q; ++r) d.set(t * p.q + r, t * p.q + r - s, 1);
  return d;
}

bool is_required(DecodeClass cls, MsgClass m) {
  for (MsgClass r : required_messages(cls))
    if (r == m) return true;
  return false;
}

// Stacks per-subcarrier images of the given per-class generators into
// columns over the whole received block. `through[j]` is the channel map
// applied on subcarrier j, or nullptr for a zero block.
Matrix stack_columns(const LinearScheme& s,
                     const std::vector<std::array<Matrix, 3>>& gens,
                     const std::vector<const Matrix*>& through,
                     const std::vector<MsgClass>& classes) {
  const unsigned block = s.params.q * s.T;
  unsigned cols = 0;
  for (MsgClass c : classes) cols += s.dim(c);
  Matrix out(s.params.M * block, cols, s.params.degree);
  unsigned col0 = 0;
  for (MsgClass c : classes) {
    const unsigned d = s.dim(c);
    if (d == 0) continue;
    for (unsigned j = 0; j < s.params.M; ++j) {
      if (!through[j]) continue;
      Matrix img = (*through[j]) * gens[j][static_cast<int>(c)];
      for (unsigned r = 0; r < block; ++r)
        for (unsigned cc = 0; cc < d; ++cc)
          if (img.at(r, cc)) out.set(j * block + r, col0 + cc, img.at(r, cc));
    }
    col0 += d;
  }
  return out;
}

}  // namespace

std::pair<Matrix, Matrix> assemble_maps(const LinearScheme& s, const ReceiverConfig& cfg,
                                        DecodeClass cls, bool as_user2) {
  if (cfg.size() != s.params.M)
    throw std::invalid_argument("mask length must equal M");
  const auto& own = as_user2 && s.other_gens ? *s.other_gens : s.gens;
  const auto& other = as_user2 || !s.other_gens ? s.gens : *s.other_gens;

  const Matrix d_own = block_shift(s.params, s.T, s.params.q - s.params.n);
  const Matrix d_cross = block_shift(s.params, s.T, s.params.q - s.params.k);

  std::vector<const Matrix*> direct(s.params.M, &d_own);
  std::vector<const Matrix*> cross(s.params.M, nullptr);
  bool any_interfered = false;
  for (unsigned j = 0; j < s.params.M; ++j) {
    if (cfg.interfered(j)) {
      cross[j] = &d_cross;
      any_interfered = true;
    }
  }

  std::vector<MsgClass> req, nuis;
  for (MsgClass m : {MsgClass::w0, MsgClass::wl, MsgClass::wm})
    (is_required(cls, m) ? req : nuis).push_back(m);

  Matrix a_dec = stack_columns(s, own, direct, req);
  Matrix a_other = stack_columns(s, own, direct, nuis);
  if (any_interfered) {
    Matrix cross_cols =
        stack_columns(s, other, cross, {MsgClass::w0, MsgClass::wl, MsgClass::wm});
    a_other = Matrix::hcat(a_other, cross_cols);
  }
  return {std::move(a_dec), std::move(a_other)};
}

VerifyReport verify(const LinearScheme& s) {
  s.validate();

  struct Job {
    DecodeClass cls;
    ReceiverConfig cfg;
    unsigned user;
  };
  std::vector<Job> jobs;
  const unsigned users = s.symmetric() ? 1 : 2;
  for (unsigned u = 1; u <= users; ++u) {
    jobs.push_back({DecodeClass::all_interfered, ReceiverConfig::all_interfered(s.params.M), u});
    for (const auto& cfg : all_configs(s.params.M, s.params.L))
      jobs.push_back({DecodeClass::exactly_l, cfg, u});
    jobs.push_back({DecodeClass::interference_free, ReceiverConfig::all_free(s.params.M), u});
  }

  auto check_one = [&s](const Job& j) {
    auto [a_dec, a_other] = assemble_maps(s, j.cfg, j.cls, j.user == 2);
    UniqueBlockRanks r = solve_unique_block_ranks(a_dec, a_other);
    VerifyEntry e;
    e.cls = j.cls;
    e.cfg = j.cfg;
    e.user = j.user;
    e.rank_dec = r.rank_dec;
    e.rank_other = r.rank_nuis;
    e.rank_joint = r.rank_joint;
    e.dec_cols = a_dec.cols();
    e.pass = r.unique;
    return e;
  };

  VerifyReport report;
  report.entries.resize(jobs.size());
  // Per-mask checks are independent; fan out only when the instance is big
  // enough for threads to pay off. The merge keeps mask order either way.
  const std::size_t block = std::size_t{s.params.M} * s.params.q * s.T;
  if (block >= 48 && jobs.size() >= 8) {
    std::vector<std::future<VerifyEntry>> futures;
    futures.reserve(jobs.size());
    for (const Job& j : jobs)
      futures.push_back(std::async(std::launch::async, check_one, j));
    for (std::size_t i = 0; i < jobs.size(); ++i) report.entries[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) report.entries[i] = check_one(jobs[i]);
  }
  report.overall = true;
  for (const auto& e : report.entries) report.overall = report.overall && e.pass;
  return report;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << decode_class_name(e.cls) << " mask=" << e.cfg.str() << " user=" << e.user
       << " rank_dec=" << e.rank_dec << "/" << e.dec_cols
       << " rank_other=" << e.rank_other << " joint=" << e.rank_joint << " "
       << (e.pass ? "PASS" : "FAIL") << "\n";
  }
  os << "overall: " << (overall ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace bic
