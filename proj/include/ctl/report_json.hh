#pragma once

#include <ctl/classify.hh>
#include <ctl/rational.hh>

#include <json.hpp>

namespace ctl
{
    /// {"num": n, "den": d, "decimal": "..."}; the decimal is for display only.
    auto rational_to_json(const Rational & q) -> nlohmann::json;
    auto rational_from_json(const nlohmann::json & j) -> Rational;

    /// Report in the "ctl/1" layout. Witnesses are written only when with_witnesses is set.
    auto report_to_json(const ThresholdReport & report, bool with_witnesses) -> nlohmann::json;

    /// Inverse of report_to_json; throws std::invalid_argument on a malformed document.
    auto report_from_json(const nlohmann::json & j) -> ThresholdReport;
}
