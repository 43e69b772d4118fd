#pragma once

// Morphism enumeration between truncated situses and Quillen lifting
// properties.  Corepresented endpoints take the vertex-map fast path; other
// shapes (quotients, shifted objects, tree unions) are searched level by
// level with face-commutation pruning.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "situskit/simplex.hpp"

namespace situskit {

struct HomOptions {
  bool surjective_vertex = false;
  bool injective_vertex = false;
  // h ∘ i = f with i : A -> X-source, f : A -> target
  const TruncatedSitus* pre_A = nullptr;
  const SitusMorphism* pre_i = nullptr;
  const SitusMorphism* pre_f = nullptr;
  // p ∘ h = g with p : target -> Y, g : X-source -> Y
  const SitusMorphism* post_p = nullptr;
  const SitusMorphism* post_g = nullptr;
  std::size_t limit = 0;  // 0 = all
  std::size_t guard = 2000000;
};

std::vector<SitusMorphism> hom_set(const TruncatedSitus& X,
                                   const TruncatedSitus& Y,
                                   const HomOptions& opt = {});

struct LiftingInstance {
  const TruncatedSitus* A = nullptr;
  const TruncatedSitus* B = nullptr;
  const TruncatedSitus* X = nullptr;
  const TruncatedSitus* Y = nullptr;
  SitusMorphism i;  // A -> B
  SitusMorphism p;  // X -> Y
};

std::optional<SitusMorphism> has_lift(const LiftingInstance& inst,
                                      const SitusMorphism& f,
                                      const SitusMorphism& g);

struct LiftReport {
  bool holds = true;
  std::optional<SitusMorphism> witness_f;  // failing square, when !holds
  std::optional<SitusMorphism> witness_g;
  std::size_t squares_checked = 0;
};

LiftReport lifting_property(const LiftingInstance& inst);

bool right_negation(const std::vector<LiftingInstance>& family);
bool left_negation(const std::vector<LiftingInstance>& family);

std::optional<SitusMorphism> exists_surjection(const TruncatedSitus& X,
                                               const TruncatedSitus& Y);

}  // namespace situskit
