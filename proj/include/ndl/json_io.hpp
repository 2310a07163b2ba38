#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ndl/experiments.hpp"
#include "ndl/factors.hpp"
#include "ndl/hamiltonize.hpp"
#include "ndl/mixing.hpp"
#include "ndl/permanent.hpp"
#include "ndl/spectral.hpp"

namespace ndl {

// Key order follows insertion so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Non-finite doubles become null.
Json real_json(double x);
Json big_json(const BigInt& x);
Json mask_json(VertexMask m);

Json to_json(const NdlCertificate& c);
Json to_json(const MixingReport& r);
Json to_json(const ExpansionCheck& e);
Json to_json(const LogBound& b);
Json to_json(const FactorHistogram& h);
Json to_json(const TwoFactor& f);
Json to_json(const RotationTrace& t);
Json to_json(const InequalityCheck& c);
Json to_json(const BoundsReport& r);
Json to_json(const TailDiagnostics& t);
Json to_json(const PhiEstimateReport& r);
Json to_json(const LogExpectation& e);
Json to_json(const MonteCarloResult& r);
Json to_json(const TrendRow& r);

// CSV tables, header line first, every line '\n'-terminated.
std::string histogram_csv(const FactorHistogram& h);
std::string checks_csv(const std::vector<InequalityCheck>& checks);
std::string trend_csv(const std::vector<TrendRow>& rows);

}  // namespace ndl
