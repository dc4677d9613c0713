#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "hsg/generator.hpp"
#include "hsg/hypgeom.hpp"
#include "hsg/koenigs.hpp"
#include "hsg/operators.hpp"
#include "hsg/rates.hpp"

namespace hsg {

/// Malformed JSON input. `field` is a dotted path such as "triplet.mu.atoms[1]".
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string field, const std::string& message);
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Measure:  {"atoms":[[s,w],...],"ac":[{"family":"cauchy","params":[c,g],"weight":w},...]}
// Triplet:  {"alpha":a,"beta":b,"mu":{...}}
nlohmann::json measure_to_json(const Measure& mu);
Measure measure_from_json(const nlohmann::json& j, const std::string& path = "mu");
nlohmann::json triplet_to_json(const HerglotzTriplet& triplet);
HerglotzTriplet triplet_from_json(const nlohmann::json& j, const std::string& path = "triplet");

/// Complex numbers travel as [re, im].
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& path);

nlohmann::json to_json(const LimitEstimate& e);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const KoenigsChart& chart);

// CSV writers; doubles are printed with 17 significant digits.
void write_orbit_csv(std::ostream& os, const Orbit& orbit);             // t,re,im,abs,arg
void write_speed_csv(std::ostream& os, const SpeedDeviationSeries& s);  // t,deviation
void write_norm_growth_csv(std::ostream& os, const NormGrowth& g);
// t,one_minus_abs,envelope_lower,envelope_upper,ratio_lower,ratio_upper

} // namespace hsg
