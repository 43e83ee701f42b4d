#include "bic/scheme_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bic {

namespace {

constexpr const char* kMagic = "bic-scheme v1";

unsigned hex_width(unsigned degree) { return (degree + 3) / 4; }

MsgClass class_from_token(const std::string& t) {
  if (t == "w0") return MsgClass::w0;
  if (t == "wl") return MsgClass::wl;
  if (t == "wm") return MsgClass::wm;
  throw std::invalid_argument("unknown message class: " + t);
}

void write_gen_block(std::ostream& os, const char* tag, unsigned subcarrier,
                     MsgClass c, const Matrix& g, unsigned degree) {
  os << tag << " " << (subcarrier + 1) << " " << msg_class_name(c) << "\n";
  const unsigned w = hex_width(degree);
  for (unsigned r = 0; r < g.rows(); ++r) {
    for (unsigned cc = 0; cc < g.cols(); ++cc) {
      if (cc) os << " ";
      os << std::hex << std::uppercase << std::setfill('0') << std::setw(w)
         << g.at(r, cc) << std::dec;
    }
    os << "\n";
  }
}

}  // namespace

std::string serialize_scheme(const LinearScheme& s) {
  s.validate();
  std::ostringstream os;
  os << kMagic << "\n";
  os << "m " << s.params.degree << "\n";
  os << "n " << s.params.n << "\n";
  os << "k " << s.params.k << "\n";
  os << "M " << s.params.M << "\n";
  os << "L " << s.params.L << "\n";
  os << "T " << s.T << "\n";
  os << "d " << s.dims[0] << " " << s.dims[1] << " " << s.dims[2] << "\n";
  for (unsigned j = 0; j < s.params.M; ++j)
    for (MsgClass c : {MsgClass::w0, MsgClass::wl, MsgClass::wm})
      if (s.dim(c) > 0) write_gen_block(os, "gen", j, c, s.gen(j, c), s.params.degree);
  if (s.other_gens) {
    for (unsigned j = 0; j < s.params.M; ++j)
      for (MsgClass c : {MsgClass::w0, MsgClass::wl, MsgClass::wm})
        if (s.dim(c) > 0)
          write_gen_block(os, "othergen", j, c,
                          (*s.other_gens)[j][static_cast<int>(c)], s.params.degree);
  }
  os << "end\n";
  return os.str();
}

LinearScheme parse_scheme(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') return line;
    }
    throw std::invalid_argument("truncated scheme file");
  };

  if (next_line() != kMagic) throw std::invalid_argument("bad scheme header");

  unsigned m = 0, n = 0, k = 0, M = 0, L = 0, T = 0;
  std::array<unsigned, 3> dims = {0, 0, 0};
  auto read_kv = [&](const char* key) -> std::string {
    std::istringstream ls(next_line());
    std::string tag;
    ls >> tag;
    if (tag != key) throw std::invalid_argument(std::string("expected ") + key);
    std::string rest;
    std::getline(ls, rest);
    return rest;
  };
  m = std::stoul(read_kv("m"));
  n = std::stoul(read_kv("n"));
  k = std::stoul(read_kv("k"));
  M = std::stoul(read_kv("M"));
  L = std::stoul(read_kv("L"));
  T = std::stoul(read_kv("T"));
  {
    std::istringstream ds(read_kv("d"));
    ds >> dims[0] >> dims[1] >> dims[2];
    if (!ds) throw std::invalid_argument("bad dimension line");
  }

  LinearScheme s;
  s.params = ChannelParams::make(n, k, M, L, m);
  s.T = T;
  s.dims = dims;
  s.gens.assign(M, {});
  const unsigned rows = s.params.q * T;
  for (unsigned j = 0; j < M; ++j)
    for (int c = 0; c < 3; ++c) s.gens[j][c] = Matrix(rows, dims[c], m);

  auto read_block = [&](const std::string& header) {
    std::istringstream hs(header);
    std::string tag, cls_tok;
    unsigned sub = 0;
    hs >> tag >> sub >> cls_tok;
    if (!hs || sub < 1 || sub > M) throw std::invalid_argument("bad generator header");
    MsgClass c = class_from_token(cls_tok);
    const unsigned d = dims[static_cast<int>(c)];
    if (d == 0) throw std::invalid_argument("generator block for an empty class");
    Matrix g(rows, d, m);
    for (unsigned r = 0; r < rows; ++r) {
      std::istringstream rs(next_line());
      for (unsigned cc = 0; cc < d; ++cc) {
        std::string tok;
        rs >> tok;
        if (tok.empty()) throw std::invalid_argument("short generator row");
        g.set(r, cc, static_cast<std::uint16_t>(std::stoul(tok, nullptr, 16)));
      }
    }
    if (tag == "gen") {
      s.gens[sub - 1][static_cast<int>(c)] = std::move(g);
    } else if (tag == "othergen") {
      if (!s.other_gens) {
        s.other_gens.emplace(M);
        for (unsigned jj = 0; jj < M; ++jj)
          for (int cc2 = 0; cc2 < 3; ++cc2)
            (*s.other_gens)[jj][cc2] = Matrix(rows, dims[cc2], m);
      }
      (*s.other_gens)[sub - 1][static_cast<int>(c)] = std::move(g);
    } else {
      throw std::invalid_argument("unknown block tag: " + tag);
    }
  };

  for (std::string h = next_line(); h != "end"; h = next_line()) read_block(h);
  s.validate();
  return s;
}

LinearScheme parse_scheme(const std::string& text) {
  std::istringstream in(text);
  return parse_scheme(in);
}

}  // namespace bic
