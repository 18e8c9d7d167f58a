#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramodular/localdata.hpp"
#include "paramodular/transfer.hpp"

namespace paramodular::io {

/// Parsed contents of an inducing-data file (commands classify/invariants).
struct InducingFile {
    InducingData data;
    std::optional<Char> xi;
    std::vector<std::string> symbols;
};

InducingFile parse_inducing(const std::string& json_text);
std::string serialize_inducing(const InducingFile& file);

HilbertFormInput parse_hilbert_input(const std::string& json_text);
std::string serialize_hilbert_input(const HilbertFormInput& input);

std::string report_to_json(const SiegelFormReport& report);
SiegelFormReport report_from_json(const std::string& json_text);
std::string report_to_text(const SiegelFormReport& report);

} // namespace paramodular::io
