#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamiltonian.hpp"

namespace folham {

using Json = nlohmann::ordered_json;

// A parsed chart and structure with their optional extras.
struct SpecFile {
    std::string name{};
    std::string description{};
    ChartPtr chart;
    HamStructure structure;
    std::vector<std::vector<Rational>> points{};
    std::vector<Poly> test_functions{};
    std::optional<BigradedForm> fundamental_form{};
    std::optional<int> expected{};  // exit code expected from verify

    friend bool operator==(const SpecFile& a, const SpecFile& b);
};

// Accepts a spec document, or a report document (its embedded spec is used).
SpecFile load_spec(const Json& doc);
SpecFile load_spec_string(const std::string& text);
SpecFile load_spec_file(const std::string& path);

// Canonical form: only nonzero entries, keys "i,j" with 1-based global indices.
Json spec_to_json(const SpecFile& spec);

// Parses "3", "-1/2" or a JSON integer.
Rational parse_rational(const Json& value, const std::string& field);

}  // namespace folham
