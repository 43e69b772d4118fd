#pragma once

// Line-oriented text formats for structures, orders, metrics, topologies and
// trees, plus the named workspace the command line works over.
//
//   .struct   universe a b c
//             rel R/2: (a,b) (b,c)
//             fun f: a->b b->b c->a
//             const e = a
//   .order    linear a b c        (ascending)   |   set a b c
//   .metric   points a b c
//             dist a b 1          (every unordered pair once; n or n/m)
//   .top      points a b
//             open a              (one line per open set; empty/full implied)
//   .tree     tree 2 2            (branching, depth)

#include <map>
#include <string>

#include "situskit/fostruct.hpp"
#include "situskit/geometry.hpp"
#include "situskit/simplex.hpp"
#include "situskit/stone.hpp"

namespace situskit {

FinStructure parse_structure(const std::string& text);
std::string serialize_structure(const FinStructure& M);

struct NamedOrder {
  FinPreorder order;
  bool linear = true;
  std::vector<std::string> names;
};

NamedOrder parse_order(const std::string& text);
std::string serialize_order(const NamedOrder& O);

FinMetric parse_metric(const std::string& text);
FinTopology parse_topology(const std::string& text);
FinTree parse_tree(const std::string& text);

struct Workspace {
  std::map<std::string, FinStructure> structures;
  std::map<std::string, NamedOrder> orders;
  std::map<std::string, FinMetric> metrics;
  std::map<std::string, FinTopology> topologies;
  std::map<std::string, FinTree> trees;

  // Dispatch by extension; the name is the file stem.  Duplicate names are
  // rejected.
  void load(const std::string& path);
};

std::string read_file(const std::string& path);

}  // namespace situskit
