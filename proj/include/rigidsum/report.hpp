#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidsum/rational.hpp"

namespace rigidsum {

// Rejected job files throw this; the message names the offending key.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A job file describes a direct sum of exponential twists over F_p.  Keys:
//   p          prime, one of 2 3 5 7 11 13           (required)
//   q          base field size, must equal p          (optional)
//   P          single twist, ascending int coeffs     (this or base)
//   base       { "rank": n, "twists": [[...], ...] }  (this or P)
//   trunc      series truncation order                (default 25 d q)
//   precision  target certified digits, 4..64         (default 12)
//   fibers     fourier fiber points                   (default 0..p-1)
// Unknown keys are errors.  Twists have degree 1..8 not divisible by p,
// integer coefficients, zero constant term; rank is at most 4.
struct JobSpec {
  unsigned p = 0;
  unsigned q = 0;
  std::vector<std::vector<long>> twists;
  long trunc = 0;
  Rat precision = Rat(12);
  std::vector<long> fibers;
  bool fibers_given = false;
};

JobSpec parse_spec(const nlohmann::json& j);

// Certified L-polynomial of the direct sum, identified against the
// character-sum oracle when the enumeration fits the budget.
nlohmann::json lfunction_report(const JobSpec& s, bool timings);

// Fourier-fiber sweep; requires a single twist.
nlohmann::json fourier_report(const JobSpec& s, bool timings);

// The full consistency battery, checks sorted by name then inputs.
nlohmann::json verify_report(const JobSpec& s, bool timings);

// Whether a report carries no failure (drives the exit code).
bool report_ok(const nlohmann::json& r);

// Stable rendering: reports with identical content are byte-identical.
std::string render_report(const nlohmann::json& r);

}  // namespace rigidsum
