#include "boxagg/output.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace boxagg::output {

namespace {

using nlohmann::json;

json prob_entry(const std::string& key, const Rational& p) {
    return json{{"key", key},
                {"num", numerator(p).str()},
                {"den", denominator(p).str()},
                {"decimal", decimal_string(p)}};
}

template <typename Map>
json dist_entries(const Map& entries) {
    json out = json::array();
    for (const auto& [key, p] : entries) {
        out.push_back(prob_entry(dims_string(key), p));
    }
    return out;
}

}  // namespace

json box_dist_record(const Box& x, const Box& y,
                     const distributions::BoxDistribution& dist) {
    return json{{"kind", "box-dist"},
                {"x", dims_string(x)},
                {"y", dims_string(y)},
                {"total_attachments", dist.total_attachments.str()},
                {"entries", dist_entries(dist.entries)}};
}

json partition_dist_record(const Partition& lam, const Partition& mu,
                           const partitions::PartitionDistribution& dist) {
    return json{{"kind", "partition-dist"},
                {"lambda", dims_string(lam)},
                {"mu", dims_string(mu)},
                {"total_attachments", dist.total_attachments.str()},
                {"entries", dist_entries(dist.entries)}};
}

json growth_pmf_record(const Box& x, const Box& y,
                       const distributions::GrowthPmf& pmf) {
    json entries = json::array();
    for (std::size_t k = 0; k < pmf.probs.size(); ++k) {
        entries.push_back(prob_entry(std::to_string(k), pmf.probs[k]));
    }
    return json{{"kind", "growth-pmf"},
                {"x", dims_string(x)},
                {"y", dims_string(y)},
                {"entries", entries}};
}

json moments_record(const Box& x, const Box& y, unsigned p, const Rational& value) {
    json entries = json::array();
    entries.push_back(prob_entry(std::to_string(p), value));
    return json{{"kind", "moments"},
                {"x", dims_string(x)},
                {"y", dims_string(y)},
                {"entries", entries}};
}

json chain_dist_record(const Box& x, int steps, const chains::StateDistribution& dist) {
    return json{{"kind", "chain-dist"},
                {"x", dims_string(x)},
                {"steps", steps},
                {"entries", dist_entries(dist)}};
}

json nstep_record(const Box& x, const Box& z, int steps, const Rational& p) {
    json entries = json::array();
    entries.push_back(prob_entry(dims_string(z), p));
    return json{{"kind", "chain-dist"},
                {"x", dims_string(x)},
                {"steps", steps},
                {"entries", entries}};
}

json trace_record(const Partition& lam0, const chains::TraceTree& tree) {
    json levels = json::array();
    for (std::size_t n = 0; n < tree.levels.size(); ++n) {
        const auto& level = tree.levels[n];
        json states = json::array();
        for (const auto& state : level.states) states.push_back(dims_string(state));
        levels.push_back(json{{"level", n},
                              {"states", states},
                              {"num", numerator(level.probability).str()},
                              {"den", denominator(level.probability).str()},
                              {"decimal", decimal_string(level.probability)},
                              {"tie_count", level.tie_count},
                              {"expanded", level.expanded}});
    }
    return json{{"kind", "trace"}, {"start", dims_string(lam0)}, {"levels", levels}};
}

json ratio_report_record(const Partition& lam0,
                         const std::vector<chains::RatioEntry>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json r{{"step", row.step},
               {"state", dims_string(row.state)},
               {"ratio", fraction_string(row.ratio)},
               {"ratio_decimal", decimal_string(row.ratio)}};
        if (row.probability) {
            r["num"] = numerator(*row.probability).str();
            r["den"] = denominator(*row.probability).str();
            r["decimal"] = decimal_string(*row.probability);
        } else {
            r["num"] = nullptr;
            r["den"] = nullptr;
            r["decimal"] = nullptr;
        }
        out.push_back(r);
    }
    return json{{"kind", "ratio-report"}, {"start", dims_string(lam0)}, {"rows", out}};
}

namespace {

template <typename Emp>
json mc_entries(const Emp& emp) {
    json out = json::array();
    for (const auto& [key, count] : emp.counts) {
        Rational freq(BigInt(count), BigInt(emp.total));
        json e = prob_entry(dims_string(key), freq);
        e["count"] = count;
        out.push_back(e);
    }
    return out;
}

}  // namespace

json mc_box_record(const Box& x, const Box& y, const montecarlo::SampleConfig& cfg,
                   const montecarlo::EmpiricalBoxDistribution& emp) {
    return json{{"kind", "mc-estimate"},
                {"x", dims_string(x)},
                {"y", dims_string(y)},
                {"trials", cfg.trials},
                {"seed", cfg.seed},
                {"partition", false},
                {"entries", mc_entries(emp)}};
}

json mc_partition_record(const Partition& lam, const Partition& mu,
                         const montecarlo::SampleConfig& cfg,
                         const montecarlo::EmpiricalPartitionDistribution& emp) {
    return json{{"kind", "mc-estimate"},
                {"x", dims_string(lam)},
                {"y", dims_string(mu)},
                {"trials", cfg.trials},
                {"seed", cfg.seed},
                {"partition", true},
                {"entries", mc_entries(emp)}};
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_row(std::ostringstream& out, const std::string& key, const json& holder) {
    out << csv_escape(key) << ','
        << (holder["num"].is_null() ? "" : holder["num"].get<std::string>()) << ','
        << (holder["den"].is_null() ? "" : holder["den"].get<std::string>()) << ','
        << (holder["decimal"].is_null() ? "" : holder["decimal"].get<std::string>())
        << '\n';
}

std::string to_csv(const json& record) {
    std::ostringstream out;
    out << "key,num,den,decimal\n";
    const std::string kind = record["kind"];
    if (kind == "trace") {
        for (const auto& level : record["levels"]) {
            if (level["states"].empty()) {
                csv_row(out, std::to_string(level["level"].get<int>()) + ":(" +
                                 std::to_string(level["tie_count"].get<std::size_t>()) +
                                 " results)",
                        level);
            }
            for (const auto& state : level["states"]) {
                csv_row(out, std::to_string(level["level"].get<int>()) + ":" +
                                 state.get<std::string>(),
                        level);
            }
        }
    } else if (kind == "ratio-report") {
        for (const auto& row : record["rows"]) {
            csv_row(out, std::to_string(row["step"].get<int>()) + ":" +
                             row["state"].get<std::string>(),
                    row);
        }
    } else {
        for (const auto& entry : record["entries"]) {
            csv_row(out, entry["key"].get<std::string>(), entry);
        }
    }
    return out.str();
}

}  // namespace

std::string render(const json& record, Format format) {
    if (format == Format::csv) return to_csv(record);
    return record.dump(2) + "\n";
}

}  // namespace boxagg::output
