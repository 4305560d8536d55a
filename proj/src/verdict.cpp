#include "largeness/verdict.hpp"

namespace largeness {

  std::string to_string(Evidence const& e) {
    std::string out = e.kind;
    for (auto const& s : e.sets) {
      out += ' ';
      out += s.to_string();
    }
    for (auto x : e.elements) {
      out += ' ';
      out += std::to_string(x);
    }
    return out;
  }

}  // namespace largeness
