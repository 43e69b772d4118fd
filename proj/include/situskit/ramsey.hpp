#pragma once

// Homogeneous simplices for colorings, hereditary non-degeneracy, the
// c-neighbourhood filter, and the quotient coloring morphism.

#include <vector>

#include "situskit/simplex.hpp"

namespace situskit {

struct Coloring {
  int level = 0;            // the level the colors live on
  std::vector<int> color;   // total on that level's carrier
};

bool is_degenerate(const TruncatedSitus& X, int level, int elem);
bool is_hereditarily_nondegenerate(const TruncatedSitus& X, int level,
                                   int elem);

// Level-m simplices whose hereditarily non-degenerate level-c faces all share
// one color.
std::vector<int> homogeneous_simplices(const TruncatedSitus& X,
                                       const Coloring& c, int m);

struct ColoringQuotient {
  TruncatedSitus source;  // X re-equipped with the c-neighbourhood filters
  TruncatedSitus quotient;
  SitusMorphism projection;
  LevelEquivalence equiv;
};

ColoringQuotient coloring_quotient(const TruncatedSitus& X, const Coloring& c);

}  // namespace situskit
