#pragma once

#include <optional>
#include <variant>

#include "hforge/fincat.hpp"

namespace hforge::cat {

// A finite diagram in C: a shape category together with a functorial
// labeling of its objects and morphisms into C.
struct Diagram {
  FinCategory shape;
  std::vector<Id> object_label;    // shape object -> C object
  std::vector<Id> morphism_label;  // shape morphism -> C morphism
};

// Throws StructuralError unless the labeling is a functor shape -> C.
void check_diagram(const FinCategory& c, const Diagram& d);

struct Cone {
  Id apex = kNone;
  std::vector<Id> legs;  // per shape object; apex -> D(x) for limits,
                         // D(x) -> apex for colimits
};

// Why a (co)limit does not exist: either no cone at all, or a candidate
// for which some cone has no mediator / two mediators.
struct NoLimit {
  bool no_cones = false;
  std::optional<Cone> candidate;
  std::optional<Cone> problem_cone;
  int mediator_count = 0;  // for problem_cone against candidate
};

using LimitResult = std::variant<Cone, NoLimit>;

LimitResult finite_limit(const FinCategory& c, const Diagram& d);
LimitResult finite_colimit(const FinCategory& c, const Diagram& d);

// Independent verification pass: legs commute with all diagram arrows and
// every cone has exactly one mediator into the candidate.
bool is_limiting_cone(const FinCategory& c, const Diagram& d, const Cone& cone);
bool is_colimiting_cone(const FinCategory& c, const Diagram& d, const Cone& cone);

std::vector<Cone> all_limit_cones(const FinCategory& c, const Diagram& d);

std::optional<Id> terminal_object(const FinCategory& c);
std::optional<Id> initial_object(const FinCategory& c);

// Standard small shapes (as shape categories).
FinCategory shape_empty();
FinCategory shape_cospan();   // a -> c <- b, objects {0,1,2}, c = 2
FinCategory shape_span();     // a <- c -> b
FinCategory shape_parallel_pair();

// All functorial labelings of the shape into C.
std::vector<Diagram> all_diagrams(const FinCategory& c, const FinCategory& shape);

// Pullback of g: B -> D along f: A -> D, as the limit of the cospan.
LimitResult pullback(const FinCategory& c, Id f, Id g);
LimitResult pushout(const FinCategory& c, Id f, Id g);

}  // namespace hforge::cat
