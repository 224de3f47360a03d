#pragma once

#include <string>
#include <vector>

#include "lts/graph.hpp"
#include "lts/json_io.hpp"

namespace lts::report {

Json fingerprint_json(const Fingerprint& f);
std::string fingerprint_text(const Fingerprint& f, std::size_t orbitDim);

std::string table1_text(const std::vector<Table1Row>& rows);
Json table1_json(const std::vector<Table1Row>& rows);

std::string matrix_text(const ScalarMatrix& m);
Json matrix_json(const ScalarMatrix& m);

std::string cohomology_text(const Cohomology& h);
Json cohomology_json(const Cohomology& h);

std::string products_text(const Lts& T);

Json classification_json(const Classification& c);
std::string classification_text(const Classification& c);

Json graph_json(const DegenerationGraph& g);

}  // namespace lts::report
