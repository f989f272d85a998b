#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "sytmaj/json_io.hpp"
#include "sytmaj/limits.hpp"
#include "sytmaj/scan.hpp"

namespace {

using namespace sytmaj;

constexpr int kExitOk = 0;
constexpr int kExitEngineError = 1;
constexpr int kExitParseError = 2;
constexpr int kExitConjectureViolation = 3;

struct CliParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Shape parse_shape_arg(const std::string& text) {
    try {
        return parse_shape(text);
    } catch (const std::invalid_argument& e) {
        throw CliParseError(e.what());
    }
}

Partition parse_partition_arg(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CliParseError(e.what());
    }
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << content;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string histogram_output(const Shape& shape, bool gaussian, const std::string& format) {
    QPolynomial gf = maj_gf(shape);
    double mu = 0, var = 0, total = 0;
    if (gaussian) {
        MomentTable table = moments_from_gf(gf, 2);
        mu = table.mean.get_d();
        var = table.variance.get_d();
        total = mpf_class(gf.value_at_one(), 128).get_d();
        if (var == 0) throw std::domain_error("hist: Gaussian overlay needs positive variance");
    }
    auto density = [&](int k) {
        return total * std::exp(-(k - mu) * (k - mu) / (2 * var)) /
               std::sqrt(2 * std::numbers::pi * var);
    };
    if (format == "json") {
        json rows = json::array();
        for (int k = gf.min_degree(); k <= gf.degree(); ++k) {
            json row{{"k", k}, {"count", gf.coeff(k).get_str()}};
            if (gaussian) row["gaussian"] = density(k);
            rows.push_back(row);
        }
        return rows.dump() + "\n";
    }
    std::string csv;
    for (int k = gf.min_degree(); k <= gf.degree(); ++k) {
        csv += std::to_string(k) + "," + gf.coeff(k).get_str();
        if (gaussian) csv += "," + format_double(density(k));
        csv += "\n";
    }
    return csv;
}

int sweep_exit_code(const SweepReport& report, bool conjecture) {
    if (report.passed()) return kExitOk;
    return conjecture ? kExitConjectureViolation : kExitEngineError;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the major index distribution on standard Young tableaux"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write output to a file instead of stdout")->capture_default_str();

    std::function<int()> action;

    // gf
    {
        auto* cmd = app.add_subcommand("gf", "Maj generating function of a shape");
        auto shape_text = std::make_shared<std::string>();
        auto brute = std::make_shared<bool>(false);
        auto cap = std::make_shared<int>(kDefaultEnumerationCap);
        cmd->add_option("shape", *shape_text, "Shape, e.g. 5,4,4,2 or 3,1/2/1,1")->required();
        cmd->add_flag("--brute", *brute, "Use the enumeration oracle instead of the closed form");
        cmd->add_option("--cap", *cap, "Enumeration cap for --brute");
        cmd->callback([&, shape_text, brute, cap] {
            action = [&, shape_text, brute, cap] {
                Shape shape = parse_shape_arg(*shape_text);
                QPolynomial gf = *brute ? brute_force_maj_gf(shape, *cap) : maj_gf(shape);
                write_output(out_path, qpolynomial_to_json(gf).dump() + "\n");
                return kExitOk;
            };
        });
    }

    // support
    {
        auto* cmd = app.add_subcommand("support", "Support classification of the fake degrees");
        auto shape_text = std::make_shared<std::string>();
        cmd->add_option("partition", *shape_text)->required();
        cmd->callback([&, shape_text] {
            action = [&, shape_text] {
                SupportClassification sc = support_classification(parse_partition_arg(*shape_text));
                write_output(out_path, support_to_json(sc).dump() + "\n");
                return kExitOk;
            };
        });
    }

    // check-zeros
    {
        auto* cmd = app.add_subcommand("check-zeros", "Exhaustive zero-pattern sweep up to n");
        auto n = std::make_shared<int>(8);
        cmd->add_option("--n", *n, "Largest cell count")->required();
        cmd->callback([&, n] {
            action = [&, n] {
                SweepReport report = sweep_zeros_theorem(*n);
                write_output(out_path, sweep_report_to_json(report).dump() + "\n");
                return sweep_exit_code(report, false);
            };
        });
    }

    // moments
    {
        auto* cmd = app.add_subcommand("moments", "Exact moments and cumulants of maj");
        auto shape_text = std::make_shared<std::string>();
        auto max_d = std::make_shared<int>(6);
        cmd->add_option("shape", *shape_text)->required();
        cmd->add_option("--max-d", *max_d, "Highest moment order");
        cmd->callback([&, shape_text, max_d] {
            action = [&, shape_text, max_d] {
                Shape shape = parse_shape_arg(*shape_text);
                MomentTable table = moments_from_gf(maj_gf(shape), *max_d);
                write_output(out_path, moment_table_to_json(table).dump() + "\n");
                return kExitOk;
            };
        });
    }

    // rotate
    {
        auto* cmd = app.add_subcommand("rotate", "Apply the maj-incrementing map to one tableau");
        auto shape_text = std::make_shared<std::string>();
        auto tableau_text = std::make_shared<std::string>();
        cmd->add_option("partition", *shape_text)->required();
        cmd->add_option("--tableau", *tableau_text, "Tableau JSON {\"rows\": [[…]]}")->required();
        cmd->callback([&, shape_text, tableau_text] {
            action = [&, shape_text, tableau_text] {
                Partition p = parse_partition_arg(*shape_text);
                json j;
                try {
                    j = json::parse(*tableau_text);
                } catch (const json::exception& e) {
                    throw CliParseError(std::string("tableau JSON: ") + e.what());
                }
                StandardTableau t(Shape(p), j.at("rows").get<std::vector<std::vector<int>>>());
                write_output(out_path, phi_outcome_to_json(phi(t)).dump() + "\n");
                return kExitOk;
            };
        });
    }

    // fixed-points
    {
        auto* cmd = app.add_subcommand("fixed-points", "Tableaux on which no rotation applies");
        auto shape_text = std::make_shared<std::string>();
        auto count_only = std::make_shared<bool>(false);
        auto cap = std::make_shared<int>(kDefaultEnumerationCap);
        cmd->add_option("partition", *shape_text)->required();
        cmd->add_flag("--count-only", *count_only, "Print just the number of fixed points");
        cmd->add_option("--cap", *cap, "Enumeration cap");
        cmd->callback([&, shape_text, count_only, cap] {
            action = [&, shape_text, count_only, cap] {
                Partition p = parse_partition_arg(*shape_text);
                std::vector<StandardTableau> fixed = rotation_fixed_points(p, *cap);
                if (*count_only) {
                    write_output(out_path, std::to_string(fixed.size()) + "\n");
                    return kExitOk;
                }
                json out = json::array();
                for (const StandardTableau& t : fixed)
                    out.push_back(json{{"rows", t.rows()},
                                       {"maj", descent_data(t).maj},
                                       {"hint", fixed_point_hint_name(phi(t).hint)}});
                write_output(out_path, out.dump() + "\n");
                return kExitOk;
            };
        });
    }

    // verify-ranked
    {
        auto* cmd = app.add_subcommand("verify-ranked", "Check maj(φ(T)) = maj(T)+1 across a shape");
        auto shape_text = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(kDefaultEnumerationCap);
        cmd->add_option("partition", *shape_text)->required();
        cmd->add_option("--cap", *cap, "Enumeration cap");
        cmd->callback([&, shape_text, cap] {
            action = [&, shape_text, cap] {
                RankedIncrementReport report =
                    verify_ranked_increment(parse_partition_arg(*shape_text), *cap);
                write_output(out_path, ranked_report_to_json(report).dump() + "\n");
                return report.all_increments_valid ? kExitOk : kExitEngineError;
            };
        });
    }

    // phi-graph
    {
        auto* cmd = app.add_subcommand("phi-graph", "DOT graph of the maj-incrementing map");
        auto shape_text = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(kDefaultEnumerationCap);
        cmd->add_option("partition", *shape_text)->required();
        cmd->add_option("--cap", *cap, "Enumeration cap");
        cmd->callback([&, shape_text, cap] {
            action = [&, shape_text, cap] {
                write_output(out_path, phi_graph_dot(parse_partition_arg(*shape_text), *cap));
                return kExitOk;
            };
        });
    }

    // limit-diagnose
    {
        auto* cmd = app.add_subcommand("limit-diagnose",
                                       "KS distances of shapes against a reference law");
        auto shapes_path = std::make_shared<std::string>();
        auto law_text = std::make_shared<std::string>("normal");
        auto format = std::make_shared<std::string>("csv");
        cmd->add_option("--shapes", *shapes_path, "JSONL file, one shape per line")->required();
        cmd->add_option("--law", *law_text, "normal or ih:M");
        cmd->add_option("--format", *format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([&, shapes_path, law_text, format] {
            action = [&, shapes_path, law_text, format] {
                ReferenceLaw law;
                try {
                    law = parse_law(*law_text);
                } catch (const std::invalid_argument& e) {
                    throw CliParseError(e.what());
                }
                std::ifstream file(*shapes_path);
                if (!file) throw std::runtime_error("cannot open shapes file: " + *shapes_path);
                json rows = json::array();
                std::string line;
                while (std::getline(file, line)) {
                    if (line.empty()) continue;
                    Shape shape = shape_from_json(json::parse(line));
                    NormalizedDistribution dist = normalized_distribution(shape);
                    double ks = ks_distance(dist, law);
                    double kappa4 = normalized_cumulant(shape, 4).get_d();
                    rows.push_back(json{{"shape", shape_to_string(shape)},
                                        {"n", shape_cells(shape)},
                                        {"aft", aft(shape)},
                                        {"ks", ks},
                                        {"kappa4_star", kappa4}});
                }
                if (*format == "json") {
                    write_output(out_path, rows.dump() + "\n");
                    return kExitOk;
                }
                std::string csv = "shape,n,aft,ks,kappa4_star\n";
                for (const json& row : rows)
                    csv += row["shape"].get<std::string>() + "," + std::to_string(row["n"].get<int>()) +
                           "," + std::to_string(row["aft"].get<int>()) + "," +
                           format_double(row["ks"].get<double>()) + "," +
                           format_double(row["kappa4_star"].get<double>()) + "\n";
                write_output(out_path, csv);
                return kExitOk;
            };
        });
    }

    // local-limit
    {
        auto* cmd = app.add_subcommand("local-limit", "Deviation of the pmf from the matched Gaussian");
        auto shape_text = std::make_shared<std::string>();
        cmd->add_option("partition", *shape_text)->required();
        cmd->callback([&, shape_text] {
            action = [&, shape_text] {
                LocalLimitReport report = local_limit_deviation(parse_partition_arg(*shape_text));
                write_output(out_path, local_limit_report_to_json(report).dump() + "\n");
                return kExitOk;
            };
        });
    }

    // hist
    {
        auto* cmd = app.add_subcommand("hist", "Histogram rows (k, count) of the maj distribution");
        auto shape_text = std::make_shared<std::string>();
        auto gaussian = std::make_shared<bool>(false);
        auto format = std::make_shared<std::string>("csv");
        cmd->add_option("shape", *shape_text)->required();
        cmd->add_flag("--gaussian", *gaussian, "Append the scaled Gaussian approximation column");
        cmd->add_option("--format", *format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([&, shape_text, gaussian, format] {
            action = [&, shape_text, gaussian, format] {
                write_output(out_path, histogram_output(parse_shape_arg(*shape_text), *gaussian, *format));
                return kExitOk;
            };
        });
    }

    // sweep
    {
        auto* cmd = app.add_subcommand("sweep", "Theorem and conjecture sweeps");
        auto which = std::make_shared<std::string>();
        auto n = std::make_shared<int>(8);
        auto catalan = std::make_shared<int>(25);
        cmd->add_option("kind", *which, "zeros, unimodal, parity, or oracle")
            ->required()
            ->check(CLI::IsMember({"zeros", "unimodal", "parity", "oracle"}));
        cmd->add_option("--n", *n, "Largest cell count")->required();
        cmd->add_option("--catalan", *catalan, "Largest k for the SYT(k,k) parity check");
        cmd->callback([&, which, n, catalan] {
            action = [&, which, n, catalan] {
                SweepReport report;
                bool conjecture = false;
                if (*which == "zeros") {
                    report = sweep_zeros_theorem(*n);
                } else if (*which == "unimodal") {
                    report = sweep_unimodality_conjecture(*n);
                    conjecture = true;
                } else if (*which == "parity") {
                    report = sweep_parity_unimodality(*n, *catalan);
                    conjecture = true;
                } else {
                    report = sweep_formula_vs_oracle(*n);
                }
                write_output(out_path, sweep_report_to_json(report).dump() + "\n");
                return sweep_exit_code(report, conjecture);
            };
        });
    }

    // wreath-gf
    {
        auto* cmd = app.add_subcommand("wreath-gf",
                                       "Fake-degree polynomial of a block list (d = 1 only)");
        auto shape_text = std::make_shared<std::string>();
        auto power = std::make_shared<int>(0);
        auto d = std::make_shared<int>(1);
        cmd->add_option("shape", *shape_text, "Blocks, e.g. 3,1/2/1,1")->required();
        cmd->add_option("--power", *power, "Substitution power q ↦ q^m (default: block count)");
        cmd->add_option("--d", *d, "Divisor parameter; only d = 1 is supported");
        cmd->callback([&, shape_text, power, d] {
            action = [&, shape_text, power, d] {
                if (*d != 1)
                    throw std::invalid_argument(
                        "wreath-gf: only d = 1 is supported (deformed q-multinomials are not implemented)");
                Shape shape = parse_shape_arg(*shape_text);
                BlockDiagonalShape blocks =
                    std::holds_alternative<Partition>(shape)
                        ? BlockDiagonalShape({std::get<Partition>(shape)})
                        : std::get<BlockDiagonalShape>(shape);
                int m = *power > 0 ? *power : blocks.block_count();
                write_output(out_path,
                             qpolynomial_to_json(maj_gf_block_diagonal(blocks, m)).dump() + "\n");
                return kExitOk;
            };
        });
    }

    // block-gf
    {
        auto* cmd = app.add_subcommand("block-gf", "Maj generating function of a stacked block shape");
        auto shape_text = std::make_shared<std::string>();
        cmd->add_option("shape", *shape_text, "Blocks, e.g. 3,1/2/1,1")->required();
        cmd->callback([&, shape_text] {
            action = [&, shape_text] {
                Shape shape = parse_shape_arg(*shape_text);
                BlockDiagonalShape blocks =
                    std::holds_alternative<Partition>(shape)
                        ? BlockDiagonalShape({std::get<Partition>(shape)})
                        : std::get<BlockDiagonalShape>(shape);
                write_output(out_path,
                             qpolynomial_to_json(maj_gf_block_diagonal(blocks, 1)).dump() + "\n");
                return kExitOk;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParseError;
    }

    return action();
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEngineError;
    }
}
