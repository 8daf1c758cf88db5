#pragma once

#include <complex>
#include <optional>
#include <string>

#include "splitoct/dirac.hpp"
#include "splitoct/gamma.hpp"
#include "splitoct/reconstruct.hpp"
#include "splitoct/reports.hpp"
#include "splitoct/sigma.hpp"

namespace splitoct {

// Plain-text views of the generated data. Every function returns a complete
// LF-terminated block; none of them touch global state.

std::string render_split_element(const SplitOctonion<>& s);  // "2i*u5 - u1" style
std::string render_matrix2(const Matrix2& m);                // "[[0, -1], [1, 0]]"

std::string render_table_I();
std::string render_table_II();
std::string render_ternaries();

std::string render_table_diff(const TableDiff& d);
std::string render_constants(const StructureConstantReport& r);
std::string render_peculiar(const PeculiarReport& r);
std::string render_nonassoc(const NonassocWitness& w);
std::string render_norms(const NormCounterexample& c);
std::string render_table_ii_check(const TableIICheck& c);
std::string render_reconstruct(const ReconstructResult& r);
std::string render_gamma(const GammaSet& g, const CliffordReport* report);
std::string render_dirac(double D, const std::complex<double>& plane,
                         const std::optional<QuaternionValue>& psi);

}  // namespace splitoct
