#ifndef REGSM_IO_HPP
#define REGSM_IO_HPP

#include <optional>
#include <string>

#include "regsm/core.hpp"
#include "regsm/matroid.hpp"

namespace regsm {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A problem instance: objective f + l and an optional matroid constraint
/// (nullopt = unconstrained).
struct Instance {
  SubmodularFn f;
  LinearFn ell;
  std::optional<Matroid> constraint;

  int n() const { return f.n(); }
  bool feasible(Mask s) const { return !constraint || constraint->is_independent(s); }
  double value(Mask s) const { return f.eval(s) + ell.eval(s); }
  Polytope polytope() const {
    return constraint ? Polytope::of_matroid(*constraint) : Polytope::cube(n());
  }
};

Instance parse_instance(const std::string& json_text);
std::string instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);

}  // namespace regsm

#endif
