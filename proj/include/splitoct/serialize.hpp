#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "splitoct/dirac.hpp"
#include "splitoct/gamma.hpp"
#include "splitoct/octonion.hpp"
#include "splitoct/reconstruct.hpp"
#include "splitoct/reports.hpp"
#include "splitoct/sigma.hpp"

namespace splitoct {

// ordered_json keeps insertion order, so identical data dumps to identical
// bytes
using Json = nlohmann::ordered_json;

Json json_of(const Rational& r);  // [num, den]
Rational rational_from_json(const Json& j);

Json json_of(const GaussianRational& g);  // {"re": [n,d], "im": [n,d]}
GaussianRational gaussian_from_json(const Json& j);

Json json_of(const Octonion& o);                   // {"basis": "octonion", "coeffs": [...]}
Json json_of(const SplitOctonion<>& s);            // {"basis": "split_octonion", ...}

Json json_of(const Matrix2& m);  // 2x2 nested arrays
Matrix2 matrix2_from_json(const Json& j);

Json json_of(const CubicMatrix& c);  // entries[x][y][z]
CubicMatrix cubic_from_json(const Json& j);

Json json_of(const SquareMatrix& m);

Json json_of(const SigmaAssignment& a);
SigmaAssignment assignment_from_json(const Json& j);

Json json_of(const TableDiff& d);
Json json_of(const StructureConstantReport& r);
Json json_of(const PeculiarReport& r);
Json json_of(const NonassocWitness& w);
Json json_of(const NormCounterexample& c);
Json json_of(const TableIICheck& c);

// Full solver artifact: scope, anchors, factored per-block solution lists,
// total count; assignments are materialized (with per-element cube lift data)
// only when the count is at most assignment_limit.
Json json_of(const ReconstructResult& r, std::uint64_t assignment_limit = 64,
             ExecPolicy policy = ExecPolicy::Serial);

Json json_of(const GammaSet& g);
Json json_of(const CliffordReport& r);

Json dirac_json(double D, const std::complex<double>& plane,
                const std::optional<QuaternionValue>& psi);

// 2-space indentation, LF line endings, trailing newline
std::string dump_json(const Json& j);

}  // namespace splitoct
