#include "stabinfer/types.hpp"

namespace stabinfer {

std::string to_string(TimeDomain domain) {
  return domain == TimeDomain::Discrete ? "discrete" : "continuous";
}

std::optional<TimeDomain> time_domain_from_string(std::string_view text) {
  if (text == "discrete") return TimeDomain::Discrete;
  if (text == "continuous") return TimeDomain::Continuous;
  return std::nullopt;
}

}  // namespace stabinfer
