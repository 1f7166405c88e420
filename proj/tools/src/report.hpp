#pragma once

#include <qsv/catalog.hpp>

#include <json.hpp>

namespace qsv::cli {

using Json = nlohmann::ordered_json;

// {version, config:{N,M,samples,seed}, results:[...], summary:{pass,fail,skipped}}
Json run_report(const VerificationConfig& config, const std::vector<VerificationReport>& reports,
                const std::vector<CoherenceResult>& specializations = {});
Json to_json(const VerificationReport& r);
Json to_json(const Witness& w);
Json to_json(const CoherenceResult& c);
Json bindings_json(const Sample& s);

// Drops the timing fields, which are the only part that varies between runs.
Json without_timing(Json report);

}  // namespace qsv::cli
