#pragma once

#include "doldkit/conjecture.hpp"
#include "doldkit/pisano.hpp"
#include "doldkit/realize.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Report documents. Exact integers are always decimal strings; machine-sized
// quantities bounded by the scan (n, residues, periods) are JSON numbers.

namespace doldkit {

using Json = nlohmann::ordered_json;

enum class OutputFormat { human, structured, csv };

std::optional<OutputFormat> parse_output_format(std::string_view text);

struct PisanoListing {
    std::vector<PisanoRecord> records;
    bool verified = false;
};

struct PrimePowerListing {
    PrimePowerPeriod period;
    unsigned t;
    unsigned max_exponent;
};

struct GoldenListing {
    std::vector<GoldenMeanCount> rows;
    std::vector<BigInt> lucas; // L_n per row
    bool all_match() const;
};

struct WitnessListing {
    SequenceSpec spec;
    std::uint64_t prime_bound;
    std::vector<DenominatorWitness> witnesses;
};

struct GrowthListing {
    SequenceSpec spec;
    GrowthResult result;
};

Json to_json(const DoldReport& r);
Json to_json(const SignReport& r);
Json to_json(const GrowthListing& r);
Json to_json(const OrbitReport& r);
Json to_json(const PisanoListing& r);
Json to_json(const PrimePowerListing& r);
Json to_json(const WallVerification& r);
Json to_json(const WitnessListing& r);
Json to_json(const ConjectureReport& r);
Json to_json(const GoldenListing& r);

std::string render(const DoldReport& r, OutputFormat format);
std::string render(const SignReport& r, OutputFormat format);
std::string render(const GrowthListing& r, OutputFormat format);
std::string render(const OrbitReport& r, OutputFormat format);
std::string render(const PisanoListing& r, OutputFormat format);
std::string render(const PrimePowerListing& r, OutputFormat format);
std::string render(const WallVerification& r, OutputFormat format);
std::string render(const WitnessListing& r, OutputFormat format);
std::string render(const ConjectureReport& r, OutputFormat format);
std::string render(const GoldenListing& r, OutputFormat format);

} // namespace doldkit
