#ifndef GOODRED_JSONIO_HPP
#define GOODRED_JSONIO_HPP

#include <json.hpp>

#include "goodred/cohomology.hpp"
#include "goodred/descent.hpp"
#include "goodred/forms.hpp"
#include "goodred/projective.hpp"

namespace goodred {

using json = nlohmann::json;

/* Integers that fit in 64 bits are emitted as JSON numbers, anything
 * larger as a decimal string. */
json int_to_json(const Int& v);

json to_json(const BinaryForm& f);
json to_json(const PointConfig& c);
json to_json(const FactorPatternModP& pattern);
json to_json(const SixTermReport& rep);
json to_json(const TwistedFiberReport& rep);
json omega_test_json(const PointConfig& c, const SPrimeSet& s);
json enumerate_json(const std::vector<BinaryForm>& forms,
                    const std::vector<std::vector<std::size_t>>* orbits);
json orbits_json(const std::vector<BinaryForm>& forms,
                 const std::vector<std::vector<std::size_t>>& orbits);
json h1_zr_json(const H1ZrResult& res);
json to_json(const FqField& f, const OrbitFiberReport& rep);

BinaryForm form_from_json(const json& j);

} // namespace goodred

#endif
