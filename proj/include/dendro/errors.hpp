#pragma once

#include <stdexcept>
#include <string>

namespace dendro {

// Input data breaks a structural invariant (bad knots, bad tree wiring, ...).
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A query lies outside the object it addresses: a time outside [0, lifetime],
// a point naming an unknown vertex or edge, an offset outside an edge.
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Encoding needs positive mass on every skeleton segment; a zero-density edge
// makes two order-adjacent points with an empty order-interval in between.
struct mes_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A tree carrying no mass at all cannot be laid out on a time axis.
struct empty_measure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed JSON payloads (shape, types, unknown fields, bad literals).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dendro
