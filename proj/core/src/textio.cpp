#include "itcalc/textio.hpp"

#include "itcalc/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace itcalc {

namespace {

struct Token {
  std::string text;
  int column = 1;
};

struct Line {
  int number = 0;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back({number, std::move(line)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t parse_int(const Token& t, int line) {
  std::int64_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected an integer, found '" + t.text + "'", line, t.column);
  }
  return v;
}

int parse_count(const Token& t, int line, std::int64_t lo, const char* what) {
  const std::int64_t v = parse_int(t, line);
  if (v < lo || v > 1'000'000) throw ParseError(std::string(what) + " out of range: " + t.text, line, t.column);
  return static_cast<int>(v);
}

// The text after the first ':' of a "keyword <x>: rest" line, with its column.
std::pair<std::string, int> after_colon(const Line& l, const char* keyword) {
  const auto colon = l.text.find(':');
  if (colon == std::string::npos) {
    throw ParseError(std::string("expected ':' in ") + keyword + " line", l.number);
  }
  return {l.text.substr(colon + 1), static_cast<int>(colon) + 2};
}

std::string vertex_label(int v) { return std::to_string(v + 1); }

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraPtr parse_algebra(std::string_view text) {
  std::optional<std::uint32_t> p;
  std::optional<int> n;
  int cap = kDefaultAdmissibilityCap;
  Quiver q;
  std::vector<std::pair<Line, std::vector<Token>>> relation_lines;
  int last_line = 0;
  for (const auto& l : split_lines(text)) {
    last_line = l.number;
    if (blank(l.text)) continue;
    auto toks = tokenize(l.text);
    const std::string& kw = toks[0].text;
    if (kw == "field") {
      if (toks.size() != 2) throw ParseError("usage: field <p>", l.number, toks[0].column);
      const std::int64_t v = parse_int(toks[1], l.number);
      if (v < 2 || v > (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(v))) {
        throw ParseError("field characteristic must be a prime <= 2^31", l.number, toks[1].column);
      }
      p = static_cast<std::uint32_t>(v);
    } else if (kw == "vertices") {
      if (toks.size() != 2) throw ParseError("usage: vertices <n>", l.number, toks[0].column);
      n = parse_count(toks[1], l.number, 1, "vertex count");
      q.vertex_count = *n;
    } else if (kw == "admissibility_cap") {
      if (toks.size() != 2) throw ParseError("usage: admissibility_cap <N>", l.number, toks[0].column);
      cap = parse_count(toks[1], l.number, 1, "admissibility cap");
    } else if (kw == "arrow") {
      // arrow <id>: <i> -> <j>
      if (!n) throw ParseError("'vertices' must precede the arrows", l.number, toks[0].column);
      auto [rest, col] = after_colon(l, "arrow");
      std::string id = l.text.substr(toks[0].column - 1 + 5, static_cast<std::size_t>(col - 2 - (toks[0].column - 1 + 5)));
      const auto trim_begin = id.find_first_not_of(" \t");
      const auto trim_end = id.find_last_not_of(" \t");
      if (trim_begin == std::string::npos) throw ParseError("arrow needs an id", l.number, toks[0].column);
      id = id.substr(trim_begin, trim_end - trim_begin + 1);
      if (id.find_first_of(" \t") != std::string::npos) throw ParseError("arrow id contains spaces", l.number);
      auto rt = tokenize(rest);
      for (auto& t : rt) t.column += col - 1;
      if (rt.size() != 3 || rt[1].text != "->") throw ParseError("usage: arrow <id>: <i> -> <j>", l.number, col);
      const int s = parse_count(rt[0], l.number, 1, "vertex");
      const int t = parse_count(rt[2], l.number, 1, "vertex");
      if (s > *n) throw ParseError("unknown vertex " + rt[0].text, l.number, rt[0].column);
      if (t > *n) throw ParseError("unknown vertex " + rt[2].text, l.number, rt[2].column);
      if (q.arrow_index(id)) throw ParseError("duplicate arrow id '" + id + "'", l.number);
      q.arrows.push_back({id, s - 1, t - 1});
    } else if (kw == "relation") {
      if (toks.size() < 3) throw ParseError("a relation needs at least two arrows", l.number, toks[0].column);
      relation_lines.push_back({l, std::vector<Token>(toks.begin() + 1, toks.end())});
    } else {
      throw ParseError("unknown keyword '" + kw + "'", l.number, toks[0].column);
    }
  }
  if (!p) throw ParseError("missing 'field' line", last_line);
  if (!n) throw ParseError("missing 'vertices' line", last_line);

  std::vector<std::vector<int>> relations;
  for (const auto& [l, toks] : relation_lines) {
    std::vector<int> r;
    for (const auto& t : toks) {
      const auto a = q.arrow_index(t.text);
      if (!a) throw ParseError("unknown arrow '" + t.text + "'", l.number, t.column);
      r.push_back(*a);
    }
    relations.push_back(std::move(r));
  }
  return build_algebra(std::move(q), *p, std::move(relations), cap);
}

AlgebraPtr load_algebra(const std::filesystem::path& path) { return parse_algebra(read_text_file(path)); }

std::string format_algebra(const Algebra& a) {
  std::ostringstream out;
  out << "field " << a.field().modulus() << "\n";
  out << "vertices " << a.vertex_count() << "\n";
  for (const auto& arr : a.quiver().arrows) {
    out << "arrow " << arr.id << ": " << vertex_label(arr.source) << " -> " << vertex_label(arr.target) << "\n";
  }
  for (const auto& r : a.relations()) {
    out << "relation";
    for (int x : r) out << " " << a.arrow(x).id;
    out << "\n";
  }
  return out.str();
}

std::vector<std::pair<std::string, Rep>> parse_modules(const AlgebraPtr& a, std::string_view text) {
  struct Pending {
    std::string name;
    int line = 0;
    std::optional<std::vector<int>> dims;
    std::vector<std::optional<Mat>> maps;
  };
  std::vector<Pending> mods;
  const PrimeField& f = a->field();
  for (const auto& l : split_lines(text)) {
    if (blank(l.text)) continue;
    auto toks = tokenize(l.text);
    const std::string& kw = toks[0].text;
    if (kw == "module") {
      if (toks.size() != 2) throw ParseError("usage: module <name>", l.number, toks[0].column);
      for (const auto& m : mods) {
        if (m.name == toks[1].text) throw ParseError("duplicate module '" + m.name + "'", l.number, toks[1].column);
      }
      mods.push_back({toks[1].text, l.number, std::nullopt, std::vector<std::optional<Mat>>(a->arrow_count())});
      continue;
    }
    if (mods.empty()) throw ParseError("expected 'module <name>' first", l.number, toks[0].column);
    Pending& cur = mods.back();
    if (kw == "dims") {
      if (static_cast<int>(toks.size()) != a->vertex_count() + 1) {
        throw ParseError("expected " + std::to_string(a->vertex_count()) + " dimensions", l.number, toks[0].column);
      }
      std::vector<int> dims;
      for (std::size_t i = 1; i < toks.size(); ++i) dims.push_back(parse_count(toks[i], l.number, 0, "dimension"));
      cur.dims = std::move(dims);
    } else if (kw == "map") {
      if (!cur.dims) throw ParseError("'dims' must precede the maps", l.number, toks[0].column);
      if (toks.size() < 2) throw ParseError("usage: map <arrow-id> <entries>", l.number, toks[0].column);
      const auto arrow = a->quiver().arrow_index(toks[1].text);
      if (!arrow) throw ParseError("unknown arrow '" + toks[1].text + "'", l.number, toks[1].column);
      const Arrow& arr = a->arrow(*arrow);
      const auto rows = static_cast<std::size_t>((*cur.dims)[static_cast<std::size_t>(arr.target)]);
      const auto cols = static_cast<std::size_t>((*cur.dims)[static_cast<std::size_t>(arr.source)]);
      if (toks.size() - 2 != rows * cols) {
        throw ParseError("map " + arr.id + " needs " + std::to_string(rows * cols) + " entries", l.number,
                         toks[1].column);
      }
      std::vector<std::int64_t> vals;
      for (std::size_t i = 2; i < toks.size(); ++i) vals.push_back(parse_int(toks[i], l.number));
      cur.maps[static_cast<std::size_t>(*arrow)] = Mat::from_ints(rows, cols, f, vals);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", l.number, toks[0].column);
    }
  }

  std::vector<std::pair<std::string, Rep>> out;
  for (auto& m : mods) {
    if (!m.dims) throw ParseError("module '" + m.name + "' has no 'dims' line", m.line);
    std::vector<Mat> maps;
    for (std::size_t i = 0; i < a->arrow_count(); ++i) {
      const Arrow& arr = a->arrow(static_cast<int>(i));
      if (m.maps[i]) {
        maps.push_back(*m.maps[i]);
      } else {
        maps.emplace_back(static_cast<std::size_t>((*m.dims)[static_cast<std::size_t>(arr.target)]),
                          static_cast<std::size_t>((*m.dims)[static_cast<std::size_t>(arr.source)]), f);
      }
    }
    try {
      out.emplace_back(m.name, Rep(a, *m.dims, std::move(maps)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError("module '" + m.name + "': " + e.what(), m.line);
    }
  }
  return out;
}

std::string format_module(const std::string& name, const Rep& m) {
  std::ostringstream out;
  out << "module " << name << "\ndims";
  for (int d : m.dims()) out << " " << d;
  out << "\n";
  for (std::size_t i = 0; i < m.algebra().arrow_count(); ++i) {
    const Mat& x = m.map(static_cast<int>(i));
    if (x.rows() * x.cols() == 0) continue;
    out << "map " << m.algebra().arrow(static_cast<int>(i)).id;
    for (Residue v : x.data()) out << " " << v;
    out << "\n";
  }
  return out.str();
}

void load_modules(ModuleContext& ctx, const std::filesystem::path& path) {
  for (auto& [name, rep] : parse_modules(ctx.algebra, read_text_file(path))) {
    ctx.names.insert_or_assign(name, std::move(rep));
  }
}

namespace {

class ExprParser {
 public:
  ExprParser(const ModuleContext& ctx, std::string_view s, int line, int column)
      : ctx_(ctx), s_(s), line_(line), column_(column) {}

  Rep parse() {
    std::vector<Rep> terms;
    skip_space();
    if (pos_ == s_.size()) fail("empty module expression");
    while (true) {
      Rep t = term();
      if (!t.is_zero()) terms.push_back(std::move(t));
      skip_space();
      if (pos_ == s_.size()) break;
      expect('+');
    }
    if (terms.empty()) return Rep::zero(ctx_.algebra);
    return direct_sum(terms);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept_word(std::string_view w) {
    skip_space();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  int vertex() {
    expect('(');
    const std::size_t at = pos_;
    const int v = integer();
    if (v < 1 || v > ctx_.algebra->vertex_count()) {
      pos_ = at;
      skip_space();
      throw Error(ErrorKind::UnknownVertex, "line " + std::to_string(line_) + ", column " +
                                                std::to_string(column_ + static_cast<int>(pos_)) + ": vertex " +
                                                std::to_string(v) + " does not exist");
    }
    expect(')');
    return v - 1;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '+' &&
           s_[pos_] != '^')
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Rep atom() {
    skip_space();
    const std::size_t start = pos_;
    const AlgebraPtr& a = ctx_.algebra;
    if (accept_word("file:")) {
      const std::string path = word();
      if (path.empty()) fail("expected a path after 'file:'");
      std::filesystem::path full = path;
      if (full.is_relative()) full = ctx_.base_dir / full;
      const auto mods = parse_modules(a, read_text_file(full));
      if (mods.size() != 1) {
        pos_ = start;
        fail(path + " must define exactly one module");
      }
      return mods.front().second;
    }
    if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '(' && (s_[pos_] == 'S' || s_[pos_] == 'P' || s_[pos_] == 'I')) {
      const char kind = s_[pos_++];
      const int v = vertex();
      if (kind == 'S') return simple(a, v);
      if (kind == 'I') return injective(a, v);
      if (accept_word("/rad^")) {
        const int k = integer();
        if (k < 1) fail("radical power must be at least 1");
        return projective_quotient(a, v, k);
      }
      return projective(a, v);
    }
    const std::string name = word();
    if (name.empty()) fail("expected a module");
    if (name == "A") return regular_module(a);
    const auto it = ctx_.names.find(name);
    if (it == ctx_.names.end()) {
      pos_ = start;
      skip_space();
      fail("unknown module '" + name + "'");
    }
    if (it->second.algebra_ptr() != a) fail("module '" + name + "' lives over a different algebra");
    return it->second;
  }

  Rep term() {
    Rep m = atom();
    if (peek('^')) {
      ++pos_;
      m = power(m, integer());
    }
    return m;
  }

  const ModuleContext& ctx_;
  std::string_view s_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

Rep parse_module_expr(const ModuleContext& ctx, std::string_view expr, int line, int column) {
  return ExprParser(ctx, expr, line, column).parse();
}

Complex parse_complex(const ModuleContext& ctx, std::string_view text) {
  const AlgebraPtr& a = ctx.algebra;
  bool header = false;
  std::map<int, std::pair<int, Rep>> terms;  // degree -> (line, module)
  std::map<int, std::pair<int, std::vector<Token>>> diffs;
  std::map<int, int> diff_columns;
  for (const auto& l : split_lines(text)) {
    if (blank(l.text)) continue;
    auto toks = tokenize(l.text);
    const std::string& kw = toks[0].text;
    if (!header) {
      if (kw != "complex" || toks.size() != 1) throw ParseError("expected 'complex'", l.number, toks[0].column);
      header = true;
      continue;
    }
    if (kw != "degree" && kw != "diff") throw ParseError("unknown keyword '" + kw + "'", l.number, toks[0].column);
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':'", l.number);
    const std::string deg_text = l.text.substr(static_cast<std::size_t>(toks[0].column - 1) + kw.size(),
                                               colon - (static_cast<std::size_t>(toks[0].column - 1) + kw.size()));
    auto deg_toks = tokenize(deg_text);
    if (deg_toks.size() != 1) throw ParseError("expected a single degree before ':'", l.number, toks[0].column);
    deg_toks[0].column += toks[0].column - 1 + static_cast<int>(kw.size());
    const std::int64_t deg64 = parse_int(deg_toks[0], l.number);
    if (deg64 < -100000 || deg64 > 100000) throw ParseError("degree out of range", l.number, deg_toks[0].column);
    const int deg = static_cast<int>(deg64);
    const std::string rest = l.text.substr(colon + 1);
    const int rest_col = static_cast<int>(colon) + 2;
    if (kw == "degree") {
      if (terms.count(deg)) throw ParseError("degree " + std::to_string(deg) + " given twice", l.number);
      terms.emplace(deg, std::make_pair(l.number, parse_module_expr(ctx, rest, l.number, rest_col)));
    } else {
      if (diffs.count(deg)) throw ParseError("diff " + std::to_string(deg) + " given twice", l.number);
      auto rt = tokenize(rest);
      for (auto& t : rt) t.column += rest_col - 1;
      diffs.emplace(deg, std::make_pair(l.number, std::move(rt)));
    }
  }
  if (!header) throw ParseError("expected 'complex'", 1);
  if (terms.empty()) {
    if (!diffs.empty()) throw ParseError("differential without terms", diffs.begin()->second.first);
    return Complex(a);
  }
  const int lo = terms.begin()->first, hi = terms.rbegin()->first;
  auto term_at = [&](int d) {
    const auto it = terms.find(d);
    return it == terms.end() ? Rep::zero(a) : it->second.second;
  };
  std::vector<Rep> ts;
  for (int d = lo; d <= hi; ++d) ts.push_back(term_at(d));

  std::vector<Hom> ds;
  for (int d = lo; d < hi; ++d) {
    const Rep src = term_at(d), dst = term_at(d + 1);
    const auto it = diffs.find(d);
    if (it == diffs.end()) {
      ds.push_back(Hom::zero(src, dst));
      continue;
    }
    const int line = it->second.first;
    const auto& toks = it->second.second;
    std::vector<Mat> comps;
    std::size_t k = 0;
    for (int v = 0; v < a->vertex_count(); ++v) {
      if (v > 0 && k < toks.size() && toks[k].text == "|") ++k;
      const auto rows = static_cast<std::size_t>(dst.dim(v));
      const auto cols = static_cast<std::size_t>(src.dim(v));
      std::vector<std::int64_t> vals;
      for (std::size_t e = 0; e < rows * cols; ++e, ++k) {
        if (k >= toks.size() || toks[k].text == "|") {
          throw ParseError("d^" + std::to_string(d) + " has too few entries at vertex " + vertex_label(v), line,
                           k < toks.size() ? toks[k].column : 0);
        }
        vals.push_back(parse_int(toks[k], line));
      }
      comps.push_back(Mat::from_ints(rows, cols, a->field(), vals));
    }
    if (k != toks.size()) throw ParseError("d^" + std::to_string(d) + " has too many entries", line, toks[k].column);
    ds.emplace_back(std::move(comps));
  }
  for (const auto& [d, entry] : diffs) {
    if (d < lo || d >= hi) throw ParseError("diff " + std::to_string(d) + " has no target term", entry.first);
  }
  try {
    return Complex(a, lo, std::move(ts), std::move(ds));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidInput) throw;
    throw ParseError(e.what(), diffs.empty() ? terms.begin()->second.first : diffs.begin()->second.first);
  }
}

Complex load_complex(const ModuleContext& ctx, const std::filesystem::path& path) {
  ModuleContext local = ctx;
  local.base_dir = path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path();
  return parse_complex(local, read_text_file(path));
}

std::optional<std::string> standard_name(const Rep& indecomposable) {
  const AlgebraPtr& a = indecomposable.algebra_ptr();
  const Algebra& alg = *a;
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (indecomposables_isomorphic(simple(a, v), indecomposable)) return "S(" + vertex_label(v) + ")";
  }
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (indecomposables_isomorphic(projective(a, v), indecomposable)) return "P(" + vertex_label(v) + ")";
  }
  for (int v = 0; v < alg.vertex_count(); ++v) {
    if (indecomposables_isomorphic(injective(a, v), indecomposable)) return "I(" + vertex_label(v) + ")";
  }
  for (int v = 0; v < alg.vertex_count(); ++v) {
    for (int k = 2; k < alg.loewy_length(v); ++k) {
      if (indecomposables_isomorphic(projective_quotient(a, v, k), indecomposable)) {
        return "P(" + vertex_label(v) + ")/rad^" + std::to_string(k);
      }
    }
  }
  return std::nullopt;
}

}  // namespace itcalc
