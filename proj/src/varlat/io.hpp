#pragma once

#include <string>

#include "json.hpp"
#include "varlat/deduction.hpp"
#include "varlat/grouplat.hpp"
#include "varlat/lattice.hpp"
#include "varlat/perm.hpp"
#include "varlat/variety.hpp"
#include "varlat/verify.hpp"

namespace varlat::io {

// Lattices travel as {"elements": [names...], "covers": [[lower, upper]...]}
// where covers reference element names.
nlohmann::json lattice_to_json(const lattice::FiniteLattice& l);
lattice::FiniteLattice lattice_from_json(const nlohmann::json& doc);
std::string lattice_to_dot(const lattice::FiniteLattice& l);
nlohmann::json classification_to_json(const lattice::FiniteLattice& l);

nlohmann::json subgroup_to_json(const perm::Subgroup& g);
perm::Subgroup subgroup_from_json(const nlohmann::json& doc);
nlohmann::json subgroup_lattice_to_json(const grouplat::SubgroupLattice& sl);

nlohmann::json free_object_to_json(const variety::FreeObject& f);
nlohmann::json trace_steps_to_json(const deduce::DeductionTrace& trace);
nlohmann::json witness_to_json(const variety::WitnessReport& w);
nlohmann::json suite_report_to_json(const verify::SuiteReport& rep);

}  // namespace varlat::io
