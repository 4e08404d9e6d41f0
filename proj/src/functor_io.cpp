#include <sstream>

#include "sigmastab/functor.hpp"

namespace sigmastab {

namespace {

// Ring-facing view of a carrier: rank plus Z-invariant factors. Over F_p the
// carrier relations are p*I and the file records the rank alone.
void object_line(std::ostringstream& os, int n, const FgAbGroup& g, Ring ring) {
  os << "object " << n;
  if (ring.kind == Ring::Kind::Fp) {
    os << " free " << g.ngens << " torsion";
  } else {
    CanonGroup cg = canonical_form(g);
    os << " free " << cg.free_rank << " torsion";
    for (const Int& t : cg.torsion) os << " " << t;
  }
  os << "\n";
}

void matrix_block(std::ostringstream& os, const IntMat& m) {
  os << "rows " << m.rows() << " cols " << m.cols() << "\n";
  if (m.cols() == 0) return;  // no entry lines for an empty matrix
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << " ";
      os << m.at(r, c);
    }
    os << "\n";
  }
}

}  // namespace

std::string print_functor(const TruncatedFunctor& t) {
  std::ostringstream os;
  os << "sigma-functor v1\n";
  os << "name " << t.name() << "\n";
  os << "ring " << t.ring().str() << "\n";
  os << "trunc " << t.truncation() << "\n";
  for (int n = 0; n <= t.truncation(); ++n) object_line(os, n, t.object(n), t.ring());
  for (int n = 0; n < t.truncation(); ++n) {
    os << "gen iota " << n << " ";
    matrix_block(os, t.gen_iota(n));
  }
  for (int n = 1; n <= t.truncation(); ++n) {
    os << "gen pi " << n << " ";
    matrix_block(os, t.gen_pi(n));
  }
  for (int n = 2; n <= t.truncation(); ++n)
    for (int i = 1; i < n; ++i) {
      os << "gen sigma " << i << " " << n << " ";
      matrix_block(os, t.gen_sigma(i, n));
    }
  os << "end\n";
  return os.str();
}

namespace {

struct Parser {
  std::istringstream in;
  int line_no = 0;
  std::string cur;

  explicit Parser(const std::string& text) : in(text) {}

  bool next_line() {
    while (std::getline(in, cur)) {
      ++line_no;
      // strip trailing carriage return
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      if (!cur.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError{line_no, msg}; }

  IntMat read_matrix(std::istringstream& head) {
    std::string kw;
    int rows, cols;
    if (!(head >> kw) || kw != "rows") fail("expected 'rows'");
    if (!(head >> rows)) fail("expected row count");
    if (!(head >> kw) || kw != "cols") fail("expected 'cols'");
    if (!(head >> cols)) fail("expected column count");
    if (rows < 0 || cols < 0) fail("negative matrix dimension");
    IntMat m(rows, cols);
    if (cols == 0) return m;
    for (int r = 0; r < rows; ++r) {
      if (!next_line()) fail("unexpected end of file inside matrix");
      std::istringstream ls(cur);
      for (int c = 0; c < cols; ++c) {
        std::string tok;
        if (!(ls >> tok)) fail("matrix row too short");
        try {
          m.at(r, c) = Int(tok);
        } catch (...) {
          fail("bad integer '" + tok + "'");
        }
      }
      std::string extra;
      if (ls >> extra) fail("matrix row too long");
    }
    return m;
  }
};

}  // namespace

std::variant<FunctorPtr, ParseError> parse_functor(const std::string& text) {
  Parser p(text);
  try {
    if (!p.next_line() || p.cur != "sigma-functor v1") p.fail("expected header 'sigma-functor v1'");
    if (!p.next_line() || p.cur.rfind("name ", 0) != 0) p.fail("expected 'name <...>'");
    std::string name = p.cur.substr(5);
    if (!p.next_line() || p.cur.rfind("ring ", 0) != 0) p.fail("expected 'ring <...>'");
    auto ring = Ring::parse(p.cur.substr(5));
    if (!ring) p.fail("unknown ring '" + p.cur.substr(5) + "'");
    if (!p.next_line() || p.cur.rfind("trunc ", 0) != 0) p.fail("expected 'trunc <N>'");
    int N = -1;
    try {
      N = std::stoi(p.cur.substr(6));
    } catch (...) {
      p.fail("bad truncation");
    }
    if (N < 0 || N > 16) p.fail("truncation out of range");

    std::vector<FgAbGroup> objects(N + 1);
    std::vector<bool> seen(N + 1, false);
    std::vector<IntMat> gi(N, IntMat(0, 0)), gp(N, IntMat(0, 0));
    std::vector<bool> seen_i(N, false), seen_p(N, false);
    std::map<std::pair<int, int>, IntMat> gs;

    while (p.next_line()) {
      std::istringstream ls(p.cur);
      std::string kw;
      ls >> kw;
      if (kw == "end") {
        for (int n = 0; n <= N; ++n)
          if (!seen[n]) p.fail("missing object " + std::to_string(n));
        for (int n = 0; n < N; ++n) {
          if (!seen_i[n]) p.fail("missing generator iota " + std::to_string(n));
          if (!seen_p[n]) p.fail("missing generator pi " + std::to_string(n + 1));
        }
        for (int n = 2; n <= N; ++n)
          for (int i = 1; i < n; ++i)
            if (!gs.count({i, n}))
              p.fail("missing generator sigma " + std::to_string(i) + " " + std::to_string(n));
        try {
          auto fn = std::make_shared<TruncatedFunctor>(name, N, *ring, std::move(objects),
                                                       std::move(gi), std::move(gp), std::move(gs));
          return FunctorPtr(fn);
        } catch (const math_error& e) {
          p.fail(e.what());
        }
      } else if (kw == "object") {
        int n, free_rank;
        std::string w;
        if (!(ls >> n) || n < 0 || n > N) p.fail("bad object index");
        if (!(ls >> w) || w != "free") p.fail("expected 'free'");
        if (!(ls >> free_rank) || free_rank < 0) p.fail("bad free rank");
        if (!(ls >> w) || w != "torsion") p.fail("expected 'torsion'");
        std::vector<Int> torsion;
        std::string tok;
        while (ls >> tok) {
          try {
            torsion.emplace_back(tok);
          } catch (...) {
            p.fail("bad torsion coefficient");
          }
          if (torsion.back() < 2) p.fail("torsion coefficients must be >= 2");
        }
        if (ring->kind != Ring::Kind::Z && !torsion.empty())
          p.fail("torsion carriers require ring Z");
        if (seen[n]) p.fail("duplicate object " + std::to_string(n));
        seen[n] = true;
        if (ring->kind == Ring::Kind::Fp) {
          std::vector<Int> ps(free_rank, Int(ring->p));
          objects[n] = FgAbGroup::from_invariants(ps, 0);
        } else {
          objects[n] = FgAbGroup::from_invariants(torsion, free_rank);
        }
      } else if (kw == "gen") {
        std::string which;
        if (!(ls >> which)) p.fail("expected generator kind");
        if (which == "iota") {
          int n;
          if (!(ls >> n) || n < 0 || n >= N) p.fail("bad iota index");
          if (seen_i[n]) p.fail("duplicate iota " + std::to_string(n));
          gi[n] = p.read_matrix(ls);
          seen_i[n] = true;
        } else if (which == "pi") {
          int n;
          if (!(ls >> n) || n < 1 || n > N) p.fail("bad pi index");
          if (seen_p[n - 1]) p.fail("duplicate pi " + std::to_string(n));
          gp[n - 1] = p.read_matrix(ls);
          seen_p[n - 1] = true;
        } else if (which == "sigma") {
          int i, n;
          if (!(ls >> i) || !(ls >> n) || n < 2 || n > N || i < 1 || i >= n)
            p.fail("bad sigma index");
          if (gs.count({i, n})) p.fail("duplicate sigma");
          gs.emplace(std::make_pair(i, n), p.read_matrix(ls));
        } else {
          p.fail("unknown generator kind '" + which + "'");
        }
      } else {
        p.fail("unknown directive '" + kw + "'");
      }
    }
    p.fail("missing 'end'");
  } catch (ParseError& e) {
    return e;
  }
}

}  // namespace sigmastab
