#ifndef CYCLOSVP_JSON_IO_HPP
#define CYCLOSVP_JSON_IO_HPP

#include <json.hpp>

#include "cyclosvp/error.hpp"
#include "cyclosvp/idealsvp.hpp"
#include "cyclosvp/lattice.hpp"
#include "cyclosvp/ntheory.hpp"
#include "cyclosvp/pell.hpp"
#include "cyclosvp/rings.hpp"

// Integers are serialized as decimal strings throughout.

namespace cyclosvp {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"ring": name, "coeffs": [...]}
Json to_json(const RingElement& x);
RingElement ring_element_from_json(const Json& j);

/// {"ring", "p", "r", "basis", "gram"}
Json to_json(const IntegerLattice& lattice);
Json to_json(const ResidueClass& rc);
Json to_json(const SvpCertificate& cert);
Json to_json(const Lambda1Result& res);
Json to_json(const Bounds& b);
Json to_json(const SvsgReport& report);
Json to_json(const Zeta16LiftReport& report);

/// {"error": code, detail: number, ...}
Json error_json(const Error& e);

}  // namespace cyclosvp

#endif  // CYCLOSVP_JSON_IO_HPP
