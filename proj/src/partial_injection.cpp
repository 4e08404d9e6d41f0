#include "sigmastab/partial_injection.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace sigmastab {

PartialInjection::PartialInjection(int m, int n, std::vector<int> images) : n_(n), map_(std::move(images)) {
  if (int(map_.size()) != m) throw math_error("PartialInjection: bad image list length");
  std::vector<char> used(n + 1, 0);
  for (int v : map_) {
    if (v < 0 || v > n) throw math_error("PartialInjection: image out of range");
    if (v != 0) {
      if (used[v]) throw math_error("PartialInjection: not injective");
      used[v] = 1;
    }
  }
}

PartialInjection PartialInjection::identity(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return PartialInjection(n, n, std::move(im));
}

PartialInjection PartialInjection::iota(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 2;
  return PartialInjection(n, n + 1, std::move(im));
}

PartialInjection PartialInjection::pi(int n_plus_1) {
  if (n_plus_1 < 1) throw math_error("pi: source must be >= 1");
  std::vector<int> im(n_plus_1, 0);
  for (int i = 2; i <= n_plus_1; ++i) im[i - 1] = i - 1;
  return PartialInjection(n_plus_1, n_plus_1 - 1, std::move(im));
}

PartialInjection PartialInjection::forget(int n, const std::vector<int>& S) {
  std::vector<int> im(n);
  for (int i = 1; i <= n; ++i) im[i - 1] = i;
  for (int s : S) {
    if (s < 1 || s > n) throw math_error("forget: index out of range");
    im[s - 1] = 0;
  }
  return PartialInjection(n, n, std::move(im));
}

PartialInjection PartialInjection::transposition(int i, int n) {
  if (i < 1 || i + 1 > n) throw math_error("transposition: out of range");
  PartialInjection p = identity(n);
  std::swap(p.map_[i - 1], p.map_[i]);
  return p;
}

PartialInjection PartialInjection::permutation(const std::vector<int>& images) {
  int n = int(images.size());
  PartialInjection p(n, n, images);
  if (p.defined_count() != n) throw math_error("permutation: undefined positions");
  return p;
}

PartialInjection PartialInjection::order_preserving_projection(int n, const std::vector<int>& S) {
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> im(n, 0);
  for (int j = 0; j < int(sorted.size()); ++j) {
    if (sorted[j] < 1 || sorted[j] > n) throw math_error("order_preserving_projection: out of range");
    if (j > 0 && sorted[j] == sorted[j - 1]) throw math_error("order_preserving_projection: repeated index");
    im[sorted[j] - 1] = j + 1;
  }
  return PartialInjection(n, int(sorted.size()), std::move(im));
}

int PartialInjection::defined_count() const {
  int k = 0;
  for (int v : map_)
    if (v != 0) ++k;
  return k;
}

PartialInjection PartialInjection::stabilize() const {
  std::vector<int> im(map_.size() + 1, 0);
  im[0] = 1;
  for (size_t i = 0; i < map_.size(); ++i) im[i + 1] = map_[i] ? map_[i] + 1 : 0;
  return PartialInjection(source() + 1, target() + 1, std::move(im));
}

bool PartialInjection::is_identity() const {
  if (source() != target()) return false;
  for (int i = 1; i <= source(); ++i)
    if (map_[i - 1] != i) return false;
  return true;
}

std::string PartialInjection::str() const {
  std::ostringstream os;
  os << source() << "->" << target() << ":[";
  for (int i = 1; i <= source(); ++i) {
    if (i > 1) os << ",";
    if (defined(i))
      os << apply(i);
    else
      os << "-";
  }
  os << "]";
  return os.str();
}

std::optional<PartialInjection> PartialInjection::parse(const std::string& s) {
  size_t arrow = s.find("->");
  if (arrow == std::string::npos) return std::nullopt;
  size_t colon = s.find(':', arrow);
  if (colon == std::string::npos) return std::nullopt;
  int m, n;
  try {
    m = std::stoi(s.substr(0, arrow));
    n = std::stoi(s.substr(arrow + 2, colon - arrow - 2));
  } catch (...) {
    return std::nullopt;
  }
  if (m < 0 || n < 0) return std::nullopt;
  std::string body = s.substr(colon + 1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') return std::nullopt;
  body = body.substr(1, body.size() - 2);
  std::vector<int> im;
  if (!body.empty()) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok == "-")
        im.push_back(0);
      else {
        try {
          im.push_back(std::stoi(tok));
        } catch (...) {
          return std::nullopt;
        }
      }
    }
  }
  if (int(im.size()) != m) return std::nullopt;
  try {
    return PartialInjection(m, n, std::move(im));
  } catch (...) {
    return std::nullopt;
  }
}

uint64_t PartialInjection::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(uint64_t(n_));
  mix(uint64_t(map_.size()));
  for (int v : map_) mix(uint64_t(v) + 0x9e37);
  return h;
}

PartialInjection compose(const PartialInjection& g, const PartialInjection& f) {
  if (f.target() != g.source()) throw math_error("compose: object mismatch");
  std::vector<int> im(f.source(), 0);
  for (int i = 1; i <= f.source(); ++i)
    if (f.defined(i) && g.defined(f.apply(i))) im[i - 1] = g.apply(f.apply(i));
  return PartialInjection(f.source(), g.target(), std::move(im));
}

Int hom_count(int m, int n) {
  Int total = 0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    Int binom_m = 1, binom_n = 1, fact = 1;
    for (int j = 0; j < k; ++j) {
      binom_m = binom_m * (m - j) / (j + 1);
      binom_n = binom_n * (n - j) / (j + 1);
      fact *= (j + 1);
    }
    total += binom_m * binom_n * fact;
  }
  return total;
}

namespace {

void enum_rec(int pos, int m, int n, std::vector<int>& cur, std::vector<char>& used,
              std::vector<PartialInjection>& out) {
  if (pos > m) {
    out.emplace_back(m, n, cur);
    return;
  }
  cur[pos - 1] = 0;
  enum_rec(pos + 1, m, n, cur, used, out);
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    cur[pos - 1] = v;
    enum_rec(pos + 1, m, n, cur, used, out);
    used[v] = 0;
  }
  cur[pos - 1] = 0;
}

std::mutex g_hom_mutex;
std::map<std::pair<int, int>, std::vector<PartialInjection>> g_hom_cache;

}  // namespace

const std::vector<PartialInjection>& enumerate_hom(int m, int n, long bound) {
  Int count = hom_count(m, n);
  if (count > bound) throw math_error("enumerate_hom: bound exceeded for Hom(" +
                                      std::to_string(m) + "," + std::to_string(n) + ")");
  std::lock_guard<std::mutex> lk(g_hom_mutex);
  auto it = g_hom_cache.find({m, n});
  if (it != g_hom_cache.end()) return it->second;
  std::vector<PartialInjection> out;
  std::vector<int> cur(m, 0);
  std::vector<char> used(n + 1, 0);
  enum_rec(1, m, n, cur, used, out);
  if (Int(out.size()) != count) throw math_error("enumerate_hom: count formula violated");
  return g_hom_cache.emplace(std::make_pair(m, n), std::move(out)).first->second;
}

PartialInjection GenAtom::value() const {
  switch (kind) {
    case Kind::Iota:
      return PartialInjection::iota(n);
    case Kind::Pi:
      return PartialInjection::pi(n);
    case Kind::Sigma:
      return PartialInjection::transposition(i, n);
  }
  throw math_error("GenAtom: bad kind");
}

std::string GenAtom::str() const {
  switch (kind) {
    case Kind::Iota:
      return "iota(" + std::to_string(n) + ")";
    case Kind::Pi:
      return "pi(" + std::to_string(n) + ")";
    case Kind::Sigma:
      return "sigma(" + std::to_string(i) + "," + std::to_string(n) + ")";
  }
  return "?";
}

PartialInjection compose_word(const GeneratorWord& w, int source) {
  PartialInjection acc = PartialInjection::identity(source);
  for (const GenAtom& a : w) acc = compose(a.value(), acc);
  return acc;
}

std::vector<int> adjacent_word(const std::vector<int>& images) {
  std::vector<int> arr = images;
  std::vector<int> word;
  int n = int(arr.size());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
    }
  }
  return word;
}

GeneratorWord decompose_into_generators(const PartialInjection& f) {
  int m = f.source(), n = f.target();
  std::vector<int> domain, complement;
  for (int i = 1; i <= m; ++i) (f.defined(i) ? domain : complement).push_back(i);
  int k = int(domain.size());
  std::vector<int> image_sorted;
  for (int i : domain) image_sorted.push_back(f.apply(i));
  std::sort(image_sorted.begin(), image_sorted.end());

  GeneratorWord word;
  // alpha: move the undefined positions to the front, keeping relative order
  std::vector<int> alpha(m);
  for (int j = 0; j < int(complement.size()); ++j) alpha[complement[j] - 1] = j + 1;
  for (int j = 0; j < k; ++j) alpha[domain[j] - 1] = m - k + j + 1;
  for (int i : adjacent_word(alpha)) word.push_back({GenAtom::Kind::Sigma, m, i});
  // drop the first m-k positions
  for (int s = m; s > k; --s) word.push_back({GenAtom::Kind::Pi, s, 0});
  // middle permutation of the k surviving strands
  std::vector<int> mid(k);
  for (int j = 0; j < k; ++j) {
    int rank = int(std::lower_bound(image_sorted.begin(), image_sorted.end(), f.apply(domain[j])) -
                   image_sorted.begin());
    mid[j] = rank + 1;
  }
  for (int i : adjacent_word(mid)) word.push_back({GenAtom::Kind::Sigma, k, i});
  // include k into n at the last k positions
  for (int s = k; s < n; ++s) word.push_back({GenAtom::Kind::Iota, s, 0});
  // beta: send the last k positions to the image, order-preserving elsewhere
  std::vector<int> beta(n);
  std::vector<char> in_image(n + 1, 0);
  for (int v : image_sorted) in_image[v] = 1;
  int slot = 0;
  for (int v = 1; v <= n; ++v)
    if (!in_image[v]) beta[slot++] = v;  // beta(j) for j <= n-k
  for (int j = 0; j < k; ++j) beta[n - k + j] = image_sorted[j];
  for (int i : adjacent_word(beta)) word.push_back({GenAtom::Kind::Sigma, n, i});
  return word;
}

}  // namespace sigmastab
