#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bic/scheme_io.hpp"
#include "bic/schemes.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace bic;

namespace {

// Shift-geometry oracle for the band layout: the image of a level set under
// the cross map G^{q-k}, as a set of receive levels below q.
std::vector<unsigned> cross_image(const ChannelParams& p, unsigned from, unsigned to) {
  std::vector<unsigned> img;
  for (unsigned l = from; l < to; ++l)
    if (l + (p.q - p.k) < p.q) img.push_back(l + (p.q - p.k));
  return img;
}

bool covers(const std::vector<unsigned>& img, unsigned from, unsigned to) {
  if (img.size() != to - from) return false;
  for (unsigned i = 0; i < img.size(); ++i)
    if (img[i] != from + i) return false;
  return true;
}

std::vector<unsigned> pick(unsigned m, unsigned count, unsigned mask_bits) {
  std::vector<unsigned> rows;
  for (unsigned i = 0; i < m && rows.size() < count; ++i)
    if (mask_bits >> i & 1) rows.push_back(i);
  return rows;
}

}  // namespace

TEST_CASE("alignment band sizes and shift geometry") {
  struct Case {
    unsigned n, k, l1, l2, l3, l4;
  };
  for (const Case& c : {Case{2, 1, 1, 0, 1, 0}, Case{3, 2, 1, 1, 0, 1},
                        Case{5, 3, 2, 1, 1, 1}}) {
    auto p = ChannelParams::make(c.n, c.k, 2, 1, 8);
    BandLayout b = alignment_bands(p);
    CHECK(b.l1 == c.l1);
    CHECK(b.l2 == c.l2);
    CHECK(b.l3 == c.l3);
    CHECK(b.l4 == c.l4);
    CHECK(b.l1 + b.l2 + b.l3 + b.l4 == c.n);

    // the other user's l1 lands exactly on l2+l3, their l2 exactly on l4,
    // and everything lower falls off the channel
    const unsigned l2_at = b.l1, l3_at = b.l1 + b.l2, l4_at = b.l1 + b.l2 + b.l3;
    CHECK(covers(cross_image(p, 0, b.l1), l2_at, l4_at));
    CHECK(covers(cross_image(p, l2_at, l3_at), l4_at, p.n));
    CHECK(cross_image(p, l3_at, p.n).empty());
  }
  CHECK_THROWS_AS(alignment_bands(ChannelParams::make(3, 1, 2, 1, 8)),
                  std::invalid_argument);
  CHECK_THROWS_AS(alignment_bands(ChannelParams::make(4, 3, 2, 1, 8)),
                  std::invalid_argument);
}

TEST_CASE("alignment layout safety: nothing maps into l4 when l2 is silent") {
  for (auto [n, k] : {std::pair{5u, 3u}, {3u, 2u}, {8u, 5u}}) {
    auto p = ChannelParams::make(n, k, 2, 1, 8);
    BandLayout b = alignment_bands(p);
    const unsigned l3_at = b.l1 + b.l2, l4_at = l3_at + b.l3;
    Matrix g_cross = Matrix::shift(p.q, p.q - p.k, p.degree);
    // populated levels with l2 silenced: l1, l3, l4
    std::vector<unsigned> populated;
    for (unsigned l = 0; l < b.l1; ++l) populated.push_back(l);
    for (unsigned l = l3_at; l < p.n; ++l) populated.push_back(l);
    std::vector<unsigned> l4_rows;
    for (unsigned l = l4_at; l < p.n; ++l) l4_rows.push_back(l);
    CHECK(g_cross.select_cols(populated).select_rows(l4_rows).is_zero());
  }
}

TEST_CASE("mds generator shapes and small cases") {
  Matrix rep = mds_generator(2, 1, 8);
  REQUIRE(rep.rows() == 2);
  REQUIRE(rep.cols() == 1);
  CHECK(rep.at(0, 0) == 1);
  CHECK(rep.at(1, 0) == 1);

  Matrix parity = mds_generator(3, 1, 1);
  REQUIRE(parity.rows() == 3);
  REQUIRE(parity.cols() == 2);
  CHECK(parity.at(0, 0) == 1);
  CHECK(parity.at(1, 1) == 1);
  CHECK(parity.at(2, 0) == 1);
  CHECK(parity.at(2, 1) == 1);
  // all 3 row pairs invertible
  for (unsigned drop = 0; drop < 3; ++drop) {
    std::vector<unsigned> keep;
    for (unsigned r = 0; r < 3; ++r)
      if (r != drop) keep.push_back(r);
    CHECK(parity.select_rows(keep).rank() == 2);
  }

  CHECK_THROWS_AS(mds_generator(5, 2, 1), std::invalid_argument);  // GF(2) too small
}

TEST_CASE("mds property: every (M-L)-row submatrix is invertible") {
  for (unsigned M = 2; M <= 8; ++M) {
    for (unsigned L = 1; L < M; ++L) {
      Matrix g = mds_generator(M, L, 8);
      const unsigned data = M - L;
      for (unsigned bits = 0; bits < (1u << M); ++bits) {
        if (static_cast<unsigned>(__builtin_popcount(bits)) != data) continue;
        CHECK(g.select_rows(pick(M, data, bits)).rank() == data);
      }
    }
  }
}

TEST_CASE("erasure decoding: puncturing any L shares leaves a solvable system") {
  for (auto [M, L] : {std::pair{4u, 2u}, {5u, 3u}, {6u, 2u}}) {
    Matrix g = mds_generator(M, L, 8);
    const unsigned data = M - L;
    for (unsigned bits = 0; bits < (1u << M); ++bits) {
      if (static_cast<unsigned>(__builtin_popcount(bits)) != L) continue;
      std::vector<unsigned> keep;
      for (unsigned r = 0; r < M; ++r)
        if (!(bits >> r & 1)) keep.push_back(r);
      CHECK(g.select_rows(keep).rank() == data);
    }
  }
}

TEST_CASE("corner schemes report exact symbol-count rates") {
  // alignment at n=5, k=3: 9 payload symbols and 3 bonus symbols per use
  auto p = ChannelParams::make(5, 3, 3, 1, 8);
  auto s = build_corner_scheme(p, Setup::r0rl, CornerId::r0rl_alignment);
  CHECK(s.dims[1] == 9);
  CHECK(s.dims[0] == 3);
  CHECK(s.rate_per_n(MsgClass::wl) == Rational(9, 5));
  CHECK(s.rate_per_n(MsgClass::w0) == Rational(3, 5));
  CHECK(s.rate_bits(MsgClass::wl) == Rational(72));

  // erasure over all levels at M=3, L=1, alpha=1/3: (M - L*alpha) n symbols
  auto p2 = ChannelParams::make(3, 1, 3, 1, 8);
  auto s2 = build_corner_scheme(p2, Setup::r0rl, CornerId::r0rl_erasure_all);
  CHECK(s2.rate_per_n(MsgClass::wl) == Rational(8, 3));

  // strong orthogonalization at alpha = 3/2 needs two slots; M alpha / 2 per-n
  auto p3 = ChannelParams::make(2, 3, 2, 1, 8);
  auto s3 = build_corner_scheme(p3, Setup::r0rl, CornerId::r0rl_strong_orthogonal);
  CHECK(s3.T == 2);
  CHECK(s3.rate_per_n(MsgClass::wl) == Rational(3, 2));
}

TEST_CASE("regime preconditions are enforced") {
  auto p = ChannelParams::make(4, 1, 2, 1, 8);  // alpha = 1/4
  CHECK_THROWS_AS(build_corner_scheme(p, Setup::r0rl, CornerId::r0rl_alignment),
                  SchemeBuildError);
  CHECK_THROWS_AS(build_corner_scheme(p, Setup::r0rl, CornerId::r0rl_strong_orthogonal),
                  SchemeBuildError);
  auto p2 = ChannelParams::make(1, 2, 2, 1, 8);  // alpha = 2
  CHECK_THROWS_AS(build_corner_scheme(p2, Setup::r0rl, CornerId::r0rl_private_split),
                  SchemeBuildError);
}

TEST_CASE("subcarrier split") {
  auto p = ChannelParams::make(1, 1, 4, 3, 8);
  auto s = split_scheme(p, MsgClass::wl);
  CHECK_FALSE(s.symmetric());
  CHECK(s.rate_per_n(MsgClass::wl) == Rational(2));  // strictly above M - L = 1

  auto toy = ChannelParams::make(1, 1, 2, 1, 8);
  CHECK(split_scheme(toy, MsgClass::wl).rate_per_n(MsgClass::wl) == Rational(1));

  auto all_interfered = ChannelParams::make(1, 1, 2, 2, 8);
  auto sm = split_scheme(all_interfered, MsgClass::wm);
  CHECK(sm.rate_per_n(MsgClass::wm) == Rational(1));

  CHECK_THROWS_AS(split_scheme(ChannelParams::make(1, 1, 3, 2, 8), MsgClass::wl),
                  SchemeBuildError);
}

TEST_CASE("scheme serialization round trip") {
  auto p = ChannelParams::make(5, 3, 3, 1, 8);
  auto s = build_corner_scheme(p, Setup::r0rl, CornerId::r0rl_alignment_erasure);
  std::string text = serialize_scheme(s);
  LinearScheme back = parse_scheme(text);
  CHECK(back.T == s.T);
  CHECK(back.dims == s.dims);
  CHECK(serialize_scheme(back) == text);

  // asymmetric schemes round trip through the othergen blocks
  auto split = split_scheme(ChannelParams::make(2, 2, 4, 3, 8), MsgClass::wl);
  LinearScheme split_back = parse_scheme(serialize_scheme(split));
  CHECK_FALSE(split_back.symmetric());
  CHECK(serialize_scheme(split_back) == serialize_scheme(split));
}

TEST_CASE("malformed scheme text is rejected") {
  CHECK_THROWS_AS(parse_scheme(std::string("nonsense")), std::invalid_argument);
  auto p = ChannelParams::make(2, 1, 2, 1, 8);
  auto s = build_corner_scheme(p, Setup::r0rl, CornerId::r0rl_private_split);
  std::string text = serialize_scheme(s);
  text.resize(text.size() / 2);
  CHECK_THROWS_AS(parse_scheme(text), std::invalid_argument);
}
