#include "situskit/formats.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace situskit {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

std::vector<std::pair<std::size_t, std::string>> lines_of(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream is(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) out.emplace_back(no, line);
  }
  return out;
}

}  // namespace

FinStructure parse_structure(const std::string& text) {
  FinStructure M;
  bool have_universe = false;
  for (const auto& [no, line] : lines_of(text)) {
    auto toks = split_ws(line);
    if (toks[0] == "universe") {
      if (have_universe) fail(no, "duplicate universe line");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (std::find(M.universe.begin(), M.universe.end(), toks[i]) !=
            M.universe.end())
          fail(no, "duplicate element " + toks[i]);
        M.universe.push_back(toks[i]);
      }
      have_universe = true;
    } else if (toks[0] == "rel") {
      if (!have_universe) fail(no, "universe must come first");
      if (toks.size() < 2) fail(no, "rel needs a name/arity");
      std::string decl = toks[1];
      if (!decl.empty() && decl.back() == ':') decl.pop_back();
      auto slash = decl.find('/');
      if (slash == std::string::npos) fail(no, "rel name must be name/arity");
      std::string name = decl.substr(0, slash);
      int arity = std::stoi(decl.substr(slash + 1));
      if (arity < 1) fail(no, "arity must be at least 1");
      if (M.sig.find_rel(name)) fail(no, "duplicate relation " + name);
      M.sig.rels.push_back({name, arity});
      auto& tuples = M.rels[name];
      std::string rest = line.substr(line.find(toks[1]) + toks[1].size());
      // tuples like (a,b) (b,c); for arity 1 bare names are accepted too
      std::string cur;
      auto flush = [&](std::size_t lno) {
        if (cur.empty()) return;
        Tuple t;
        std::string item;
        std::istringstream cs(cur);
        while (std::getline(cs, item, ',')) {
          item.erase(std::remove_if(item.begin(), item.end(), ::isspace),
                     item.end());
          if (item.empty()) fail(lno, "empty tuple entry");
          t.push_back(M.element(item));
        }
        if (static_cast<int>(t.size()) != arity)
          fail(lno, "tuple arity mismatch for " + name);
        tuples.insert(t);
        cur.clear();
      };
      bool in_paren = false;
      for (char c : rest) {
        if (c == '(') {
          in_paren = true;
        } else if (c == ')') {
          in_paren = false;
          flush(no);
        } else if (in_paren) {
          cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ':') {
          cur += c;
        } else if (!cur.empty()) {
          flush(no);
        }
      }
      flush(no);
    } else if (toks[0] == "fun") {
      if (!have_universe) fail(no, "universe must come first");
      std::string name = toks[1];
      if (!name.empty() && name.back() == ':') name.pop_back();
      if (M.sig.has_fun(name)) fail(no, "duplicate function " + name);
      M.sig.funs.push_back(name);
      std::vector<int> tab(M.universe.size(), -1);
      for (std::size_t i = 2; i < toks.size(); ++i) {
        auto arrow = toks[i].find("->");
        if (arrow == std::string::npos) fail(no, "expected a->b entries");
        int from = M.element(toks[i].substr(0, arrow));
        int to = M.element(toks[i].substr(arrow + 2));
        tab[static_cast<std::size_t>(from)] = to;
      }
      for (int t : tab)
        if (t < 0) fail(no, "function table for " + name + " is not total");
      M.funs[name] = tab;
    } else if (toks[0] == "const") {
      if (toks.size() != 4 || toks[2] != "=") fail(no, "expected: const e = a");
      if (M.sig.has_const(toks[1])) fail(no, "duplicate constant " + toks[1]);
      M.sig.consts.push_back(toks[1]);
      M.consts[toks[1]] = M.element(toks[3]);
    } else {
      fail(no, "unknown directive " + toks[0]);
    }
  }
  if (!have_universe) throw ParseError("structure file without a universe line");
  return M;
}

std::string serialize_structure(const FinStructure& M) {
  std::ostringstream os;
  os << "universe";
  for (const auto& e : M.universe) os << ' ' << e;
  os << '\n';
  auto rels = M.sig.rels;
  std::sort(rels.begin(), rels.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& r : rels) {
    os << "rel " << r.name << '/' << r.arity << ':';
    auto it = M.rels.find(r.name);
    if (it != M.rels.end())
      for (const auto& t : it->second) {
        os << " (";
        for (std::size_t i = 0; i < t.size(); ++i)
          os << (i ? "," : "")
             << M.universe[static_cast<std::size_t>(t[i])];
        os << ')';
      }
    os << '\n';
  }
  auto funs = M.sig.funs;
  std::sort(funs.begin(), funs.end());
  for (const auto& f : funs) {
    os << "fun " << f << ':';
    const auto& tab = M.funs.at(f);
    for (std::size_t x = 0; x < tab.size(); ++x)
      os << ' ' << M.universe[x] << "->"
         << M.universe[static_cast<std::size_t>(tab[x])];
    os << '\n';
  }
  auto consts = M.sig.consts;
  std::sort(consts.begin(), consts.end());
  for (const auto& c : consts)
    os << "const " << c << " = "
       << M.universe[static_cast<std::size_t>(M.consts.at(c))] << '\n';
  return os.str();
}

NamedOrder parse_order(const std::string& text) {
  auto ls = lines_of(text);
  if (ls.size() != 1) throw ParseError("order file must have one line");
  auto toks = split_ws(ls[0].second);
  NamedOrder O;
  if (toks[0] == "linear")
    O.linear = true;
  else if (toks[0] == "set")
    O.linear = false;
  else
    fail(ls[0].first, "expected 'linear' or 'set'");
  int n = static_cast<int>(toks.size()) - 1;
  for (int i = 0; i < n; ++i) O.names.push_back(toks[static_cast<std::size_t>(i) + 1]);
  O.order = O.linear ? FinPreorder::chain(n) : FinPreorder::set(n);
  return O;
}

std::string serialize_order(const NamedOrder& O) {
  std::ostringstream os;
  os << (O.linear ? "linear" : "set");
  for (const auto& n : O.names) os << ' ' << n;
  os << '\n';
  return os.str();
}

FinMetric parse_metric(const std::string& text) {
  FinMetric M;
  std::vector<std::string> names;
  struct Entry {
    int a, b;
    long long num, den;
  };
  std::vector<Entry> entries;
  for (const auto& [no, line] : lines_of(text)) {
    auto toks = split_ws(line);
    if (toks[0] == "points") {
      for (std::size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i]);
    } else if (toks[0] == "dist") {
      if (toks.size() != 4) fail(no, "expected: dist a b value");
      auto find = [&](const std::string& s) {
        auto it = std::find(names.begin(), names.end(), s);
        if (it == names.end()) fail(no, "unknown point " + s);
        return static_cast<int>(it - names.begin());
      };
      long long num, den = 1;
      auto slash = toks[3].find('/');
      if (slash == std::string::npos) {
        num = std::stoll(toks[3]);
      } else {
        num = std::stoll(toks[3].substr(0, slash));
        den = std::stoll(toks[3].substr(slash + 1));
        if (den <= 0) fail(no, "denominator must be positive");
      }
      entries.push_back({find(toks[1]), find(toks[2]), num, den});
    } else {
      fail(no, "unknown directive " + toks[0]);
    }
  }
  long long scale = 1;
  for (const auto& e : entries) scale = std::lcm(scale, e.den);
  int n = static_cast<int>(names.size());
  std::vector<Tuple> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i});
  M.points = Carrier::from(pts);
  M.dist.assign(static_cast<std::size_t>(n),
                std::vector<long long>(static_cast<std::size_t>(n), -1));
  for (int i = 0; i < n; ++i) M.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  for (const auto& e : entries) {
    long long v = e.num * (scale / e.den);
    M.dist[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = v;
    M.dist[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = v;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (M.dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] < 0)
        throw ParseError("metric: missing distance between " + names[static_cast<std::size_t>(a)] +
                         " and " + names[static_cast<std::size_t>(b)]);
  M.check();
  return M;
}

FinTopology parse_topology(const std::string& text) {
  FinTopology T;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> open_lines;
  for (const auto& [no, line] : lines_of(text)) {
    auto toks = split_ws(line);
    if (toks[0] == "points") {
      for (std::size_t i = 1; i < toks.size(); ++i) names.push_back(toks[i]);
    } else if (toks[0] == "open") {
      open_lines.emplace_back(toks.begin() + 1, toks.end());
    } else {
      fail(no, "unknown directive " + toks[0]);
    }
  }
  T.npoints = static_cast<int>(names.size());
  auto find = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw ParseError("unknown point " + s);
    return static_cast<int>(it - names.begin());
  };
  auto add = [&](const IndexSet& o) {
    for (const auto& e : T.opens)
      if (e == o) return;
    T.opens.push_back(o);
  };
  add(IndexSet(static_cast<std::size_t>(T.npoints)));
  add(IndexSet::full(static_cast<std::size_t>(T.npoints)));
  for (const auto& ol : open_lines) {
    IndexSet o(static_cast<std::size_t>(T.npoints));
    for (const auto& s : ol) o.insert(static_cast<std::size_t>(find(s)));
    add(o);
  }
  T.check();
  return T;
}

FinTree parse_tree(const std::string& text) {
  auto ls = lines_of(text);
  if (ls.size() != 1) throw ParseError("tree file must have one line");
  auto toks = split_ws(ls[0].second);
  if (toks.size() != 3 || toks[0] != "tree")
    fail(ls[0].first, "expected: tree <branching> <depth>");
  return FinTree::make(std::stoi(toks[1]), std::stoi(toks[2]));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void Workspace::load(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  if (dot == std::string::npos) throw ParseError("file needs an extension: " + path);
  std::string stem = base.substr(0, dot);
  std::string ext = base.substr(dot + 1);
  auto unique = [&](bool taken) {
    if (taken) throw ParseError("duplicate name in workspace: " + stem);
  };
  std::string text = read_file(path);
  if (ext == "struct") {
    unique(structures.count(stem) > 0);
    structures[stem] = parse_structure(text);
  } else if (ext == "order") {
    unique(orders.count(stem) > 0);
    orders[stem] = parse_order(text);
  } else if (ext == "metric") {
    unique(metrics.count(stem) > 0);
    metrics[stem] = parse_metric(text);
  } else if (ext == "top") {
    unique(topologies.count(stem) > 0);
    topologies[stem] = parse_topology(text);
  } else if (ext == "tree") {
    unique(trees.count(stem) > 0);
    trees[stem] = parse_tree(text);
  } else {
    throw ParseError("unknown extension ." + ext);
  }
}

}  // namespace situskit
