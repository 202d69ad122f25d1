#pragma once

#include <string>

#include "onto/classifier.hpp"
#include "onto/model.hpp"

namespace onto {

// Machine-readable views, pretty-printed with two-space indent and a
// trailing newline.  Key order is fixed, so equal inputs give equal
// bytes.

std::string dump_json(const Ontology& ont);
std::string dump_json(const SubsumptionDag& dag);
std::string dump_json(const CheckReport& report);

} // namespace onto
