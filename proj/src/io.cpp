#include "kzl/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace kzl {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// content lines with comments and blanks stripped, 1-based line numbers kept
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string directory_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return path.substr(0, slash);
}

RingPtr parse_ring_names(const std::string& body) {
  std::vector<std::string> names;
  for (const auto& token : split_commas(body)) {
    if (token.empty()) throw Error("empty variable token in ring header");
    auto dots = token.find("..");
    if (dots == std::string::npos) {
      names.push_back(token);
      continue;
    }
    std::string lo = token.substr(0, dots), hi = token.substr(dots + 2);
    auto stem_of = [](const std::string& s) -> std::pair<std::string, int> {
      size_t p = s.size();
      while (p > 0 && std::isdigit(static_cast<unsigned char>(s[p - 1]))) --p;
      if (p == s.size()) return {s, -1};
      return {s.substr(0, p), std::stoi(s.substr(p))};
    };
    auto [stem_lo, a] = stem_of(lo);
    auto [stem_hi, b] = stem_of(hi);
    if (stem_lo != stem_hi || a < 0 || b < a)
      throw Error("bad variable range '" + token + "'");
    for (int k = a; k <= b; ++k) names.push_back(stem_lo + std::to_string(k));
  }
  return Ring::make(std::move(names));
}

std::string ring_names_header(const Ring& ring) {
  std::string out = "ring: ";
  for (int i = 0; i < ring.size(); ++i) {
    if (i) out += ",";
    out += ring.name(i);
  }
  return out;
}

IdealFile parse_ideal_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error("empty ideal file");
  auto [first_no, first] = lines.front();
  if (first.rfind("ring:", 0) != 0) fail_at(first_no, "expected 'ring:' header");
  IdealFile out;
  out.ring = parse_ring_names(trim(first.substr(5)));
  for (size_t k = 1; k < lines.size(); ++k) {
    auto [no, line] = lines[k];
    try {
      out.polynomials.push_back(Polynomial::parse(out.ring, line));
    } catch (const Error& e) {
      fail_at(no, e.what());
    }
  }
  return out;
}

IdealFile read_ideal_file(const std::string& path) {
  return parse_ideal_text(read_text_file(path));
}

void write_ideal_file(const std::string& path, const RingPtr& ring,
                      const std::vector<Polynomial>& polynomials) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << ring_names_header(*ring) << "\n";
  for (const auto& p : polynomials) out << p.to_string() << "\n";
}

Graph parse_graph_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error("empty graph file");
  auto [first_no, first] = lines.front();
  if (first.rfind("graph", 0) != 0) fail_at(first_no, "expected 'graph n=<n>' header");
  auto eq = first.find("n=");
  if (eq == std::string::npos) fail_at(first_no, "missing n=<n>");
  int n = std::stoi(first.substr(eq + 2));
  std::vector<std::pair<int, int>> edges;
  for (size_t k = 1; k < lines.size(); ++k) {
    auto [no, line] = lines[k];
    std::istringstream in(line);
    int i = 0, j = 0;
    if (!(in >> i >> j)) fail_at(no, "expected edge 'i j'");
    edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph read_graph_file(const std::string& path) {
  return parse_graph_text(read_text_file(path));
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << "graph n=" << g.size() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
}

PosetOrLattice parse_poset_or_lattice_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error("empty poset/lattice file");
  auto [first_no, first] = lines.front();
  bool lattice = first.rfind("lattice", 0) == 0;
  if (!lattice && first.rfind("poset", 0) != 0)
    fail_at(first_no, "expected 'poset' or 'lattice' header");

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> cover_names;
  for (size_t k = 1; k < lines.size(); ++k) {
    auto [no, line] = lines[k];
    if (line.rfind("elements:", 0) == 0) {
      for (const auto& name : split_commas(trim(line.substr(9))))
        names.push_back(name);
      continue;
    }
    auto lt = line.find('<');
    if (lt == std::string::npos) fail_at(no, "expected 'a < b' cover");
    cover_names.emplace_back(trim(line.substr(0, lt)), trim(line.substr(lt + 1)));
  }
  auto ensure = [&](const std::string& n) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    names.push_back(n);
    return static_cast<int>(names.size() - 1);
  };
  std::vector<std::pair<int, int>> covers;
  for (const auto& [a, b] : cover_names) covers.emplace_back(ensure(a), ensure(b));
  if (lattice) return DistributiveLattice::from_order(names, covers);
  return Poset(names, covers);
}

PosetOrLattice read_poset_or_lattice_file(const std::string& path) {
  return parse_poset_or_lattice_text(read_text_file(path));
}

FiltrationFile parse_filtration_text(const std::string& text) {
  auto lines = content_lines(text);
  FiltrationFile out;
  size_t start = 0;
  if (!lines.empty() && lines[0].second.rfind("quotient:", 0) == 0) {
    out.quotient_path = trim(lines[0].second.substr(9));
    start = 1;
  }
  for (size_t k = start; k < lines.size(); ++k) {
    const std::string& line = lines[k].second;
    FiltrationFile::Member m;
    if (line == "m") {
      m.maximal = true;
    } else if (line != "0") {
      m.forms = split_commas(line);
    }
    out.members.push_back(std::move(m));
  }
  return out;
}

FiltrationFile read_filtration_file(const std::string& path) {
  return parse_filtration_text(read_text_file(path));
}

ImagesFile parse_images_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error("empty images file");
  auto [first_no, first] = lines.front();
  if (first.rfind("ring:", 0) != 0) fail_at(first_no, "expected 'ring:' header");
  ImagesFile out;
  out.ring = parse_ring_names(trim(first.substr(5)));
  for (size_t k = 1; k < lines.size(); ++k) {
    auto [no, line] = lines[k];
    Polynomial p = Polynomial::parse(out.ring, line);
    if (p.term_count() != 1 || p.terms()[0].coeff != 1)
      fail_at(no, "expected a monomial");
    out.images.push_back(p.terms()[0].mono);
  }
  return out;
}

ImagesFile read_images_file(const std::string& path) {
  return parse_images_text(read_text_file(path));
}

}  // namespace kzl
