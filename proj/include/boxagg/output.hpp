#pragma once

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>

#include "boxagg/chains.hpp"
#include "boxagg/distributions.hpp"
#include "boxagg/montecarlo.hpp"
#include "boxagg/partitions.hpp"
#include "boxagg/symfunc.hpp"

namespace boxagg::output {

enum class Format { json, csv };

/// Builders for the machine-readable records the CLI prints. Probabilities
/// carry both the exact fraction ("num/den", lowest terms) and a 4-place
/// decimal rendering; the fraction is authoritative.
nlohmann::json box_dist_record(const Box& x, const Box& y,
                               const distributions::BoxDistribution& dist);
nlohmann::json partition_dist_record(const Partition& lam, const Partition& mu,
                                     const partitions::PartitionDistribution& dist);
nlohmann::json growth_pmf_record(const Box& x, const Box& y,
                                 const distributions::GrowthPmf& pmf);
nlohmann::json moments_record(const Box& x, const Box& y, unsigned p,
                              const Rational& value);
nlohmann::json chain_dist_record(const Box& x, int steps,
                                 const chains::StateDistribution& dist);
nlohmann::json nstep_record(const Box& x, const Box& z, int steps, const Rational& p);
nlohmann::json trace_record(const Partition& lam0, const chains::TraceTree& tree);
nlohmann::json ratio_report_record(const Partition& lam0,
                                   const std::vector<chains::RatioEntry>& rows);
nlohmann::json mc_box_record(const Box& x, const Box& y,
                             const montecarlo::SampleConfig& cfg,
                             const montecarlo::EmpiricalBoxDistribution& emp);
nlohmann::json mc_partition_record(const Partition& lam, const Partition& mu,
                                   const montecarlo::SampleConfig& cfg,
                                   const montecarlo::EmpiricalPartitionDistribution& emp);

/// Serializes a record: pretty JSON, or the flat CSV form
/// (key,num,den,decimal rows; trace/ratio rows carry their level/step in the
/// key column).
std::string render(const nlohmann::json& record, Format format);

}  // namespace boxagg::output
