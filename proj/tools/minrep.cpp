// minrep: minimal prefix-notation representations of natural numbers.
//
// Exit status: 0 success, 1 a verification failed, 2 usage error,
// 3 I/O or table format error.

#include "minrep/analysis.hpp"
#include "minrep/census.hpp"
#include "minrep/engine.hpp"
#include "minrep/exports.hpp"
#include "minrep/extremal.hpp"
#include "minrep/table_io.hpp"
#include "minrep/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace minrep;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string opset = "1S*";
    std::uint64_t limit = 0;
    std::string out;
    std::string text_out;
    std::string table;
    bool resume = false;
    bool no_prune = false;
    bool quiet = false;
    std::uint64_t n = 0;
    unsigned kmax = 54;
    std::size_t digit_cap = kDefaultDigitCap;
    unsigned depth = 14;
    std::string values_out;
    std::string checks = "all";
    std::string out_dir;
    std::uint64_t small_limit = 1000;
    unsigned efficient_kmax = 40;
    unsigned closed_form_kmax = 100;
    unsigned structure_kmax = 60;
};

void require_preset(const std::string& id) {
    const auto& presets = preset_ids();
    if (std::find(presets.begin(), presets.end(), id) == presets.end())
        throw UsageError("unknown operator set '" + id + "' (expected 1S, 1S+, 1S*, 1S+*, 1S^)");
}

EngineConfig engine_config(const Options& o) {
    EngineConfig cfg;
    cfg.prune = !o.no_prune;
    if (!o.quiet)
        cfg.progress = [](std::uint64_t done, std::uint64_t limit) {
            std::cerr << "  " << done << " / " << limit << '\n';
        };
    return cfg;
}

// Either --table or --opset/--limit.
ComplexityTable obtain_table(const Options& o) {
    if (!o.table.empty()) return load_table(o.table);
    require_preset(o.opset);
    if (o.limit < 1) throw UsageError("--limit must be at least 1 (or pass --table)");
    return build_table(OperatorSet::from_id(o.opset), o.limit, engine_config(o));
}

void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    write_atomically(path, writer);
}

int cmd_compute(const Options& o) {
    require_preset(o.opset);
    if (o.limit < 1) throw UsageError("--limit must be at least 1");
    if (o.out.empty()) throw UsageError("compute needs --out");
    const auto ops = OperatorSet::from_id(o.opset);
    std::optional<ComplexityTable> table;
    if (o.resume && std::filesystem::exists(o.out)) {
        auto base = load_table(o.out);
        if (!(base.ops() == ops))
            throw FormatError("cannot resume: " + o.out + " holds a " + base.ops().id() + " table");
        if (base.limit() > o.limit)
            throw UsageError("cannot resume: stored limit " + std::to_string(base.limit()) + " exceeds --limit");
        table = extend_table(base, o.limit, engine_config(o));
    } else {
        table = build_table(ops, o.limit, engine_config(o));
    }
    save_table(*table, o.out);
    if (!o.text_out.empty()) emit(o.text_out, [&](std::ostream& os) { write_table_text(*table, os); });
    std::cerr << "wrote " << o.out << " (" << ops.id() << ", N=" << table->limit() << ")\n";
    return kOk;
}

int cmd_witness(const Options& o) {
    const auto table = obtain_table(o);
    if (!table.in_range(o.n))
        throw UsageError(std::to_string(o.n) + " is outside 1.." + std::to_string(table.limit()));
    std::cout << "n,complexity,witness\n"
              << o.n << ',' << table.complexity_of(o.n) << ',' << serialize(witness(table, o.n)) << '\n';
    return kOk;
}

int cmd_ugly(const Options& o) {
    const auto table = obtain_table(o);
    const auto ugly = ugly_numbers(table);
    emit(o.out, [&](std::ostream& os) { write_ugly(ugly, os); });
    return kOk;
}

int cmd_maxrep(const Options& o) {
    require_preset(o.opset);
    if (o.kmax < 1) throw UsageError("--kmax must be at least 1");
    const auto records = max_table(OperatorSet::from_id(o.opset), o.kmax, o.digit_cap);
    emit(o.out, [&](std::ostream& os) { write_maxima(records, os); });
    return kOk;
}

int cmd_hist(const Options& o) {
    const auto table = obtain_table(o);
    const auto rows = histogram(table);
    emit(o.out, [&](std::ostream& os) { write_histogram(rows, os); });
    return kOk;
}

int cmd_oracle(const Options& o) {
    require_preset(o.opset);
    const auto census = enumerate_values(OperatorSet::from_id(o.opset), o.depth);
    emit(o.out, [&](std::ostream& os) { write_census(census, os); });
    if (!o.values_out.empty()) emit(o.values_out, [&](std::ostream& os) { write_census_values(census, os); });
    return kOk;
}

std::vector<std::string> split_checks(const std::string& list) {
    if (list == "all") return check_ids();
    std::vector<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        if (std::find(check_ids().begin(), check_ids().end(), item) == check_ids().end())
            throw UsageError("unknown check '" + item + "'");
        out.push_back(item);
    }
    if (out.empty()) throw UsageError("no checks selected");
    return out;
}

int cmd_verify(const Options& o) {
    if (o.limit < 1) throw UsageError("--limit must be at least 1");
    const auto checks = split_checks(o.checks);
    WorkspaceConfig cfg;
    cfg.limit = o.limit;
    cfg.small_limit = o.small_limit;
    cfg.efficient_k_max = o.efficient_kmax;
    cfg.closed_form_k_max = o.closed_form_kmax;
    cfg.structure_k_max = o.structure_kmax;
    cfg.oracle_depth = o.depth;
    cfg.engine = engine_config(o);
    cfg.engine.progress = nullptr;
    Workspace ws(cfg);
    if (!o.table.empty()) ws.adopt(load_table(o.table));

    std::vector<VerificationReport> all;
    for (const auto& id : checks) {
        auto reports = verify(id, ws);
        for (const auto& r : reports) {
            std::cerr << (r.pass ? "PASS " : "FAIL ") << r.check << " [" << r.opset << "] " << r.range;
            if (!r.notes.empty()) std::cerr << "  (" << r.notes << ")";
            std::cerr << '\n';
        }
        if (!o.out_dir.empty()) {
            std::filesystem::create_directories(o.out_dir);
            write_atomically(std::filesystem::path(o.out_dir) / (id + ".csv"),
                             [&](std::ostream& os) { write_reports(reports, os); });
        }
        all.insert(all.end(), reports.begin(), reports.end());
    }
    write_reports(all, std::cout);
    const bool ok = std::all_of(all.begin(), all.end(), [](const auto& r) { return r.pass; });
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal prefix-notation representations of natural numbers"};
    app.require_subcommand(1);
    Options o;

    const auto add_opset = [&](CLI::App* cmd) {
        cmd->add_option("--opset", o.opset, "Operator set: 1S, 1S+, 1S*, 1S+*, 1S^")->capture_default_str();
    };
    const auto add_quiet = [&](CLI::App* cmd) { cmd->add_flag("--quiet", o.quiet, "No progress output"); };

    auto* compute = app.add_subcommand("compute", "Build a complexity table and save it");
    add_opset(compute);
    compute->add_option("--limit", o.limit, "Largest n")->required();
    compute->add_option("--out", o.out, "Binary table path")->required();
    compute->add_option("--text", o.text_out, "Also write n,complexity,witness text");
    compute->add_flag("--resume", o.resume, "Extend an existing table at --out");
    compute->add_flag("--no-prune", o.no_prune, "Evaluate every sum split");
    add_quiet(compute);

    const auto add_table_source = [&](CLI::App* cmd) {
        add_opset(cmd);
        cmd->add_option("--limit", o.limit, "Build a table to this limit");
        cmd->add_option("--table", o.table, "Read a saved table instead of building");
        add_quiet(cmd);
    };

    auto* witness_cmd = app.add_subcommand("witness", "Print c(n) and a minimal representation");
    add_table_source(witness_cmd);
    witness_cmd->add_option("--n", o.n, "The number")->required();

    auto* ugly = app.add_subcommand("ugly", "Ugly numbers: n,witness,complexity,primality");
    add_table_source(ugly);
    ugly->add_option("--out", o.out, "Output path (default stdout)");

    auto* maxrep = app.add_subcommand("maxrep", "Maximal values M(k): k,value,witness");
    add_opset(maxrep);
    maxrep->add_option("--kmax", o.kmax, "Largest length")->capture_default_str();
    maxrep->add_option("--digit-cap", o.digit_cap, "Decimal digit cap for exact values")->capture_default_str();
    maxrep->add_option("--out", o.out, "Output path (default stdout)");

    auto* hist = app.add_subcommand("hist", "Histogram of complexities: k,count,complete");
    add_table_source(hist);
    hist->add_option("--out", o.out, "Output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Run named checks; exit 1 on any failure");
    verify_cmd->add_option("--checks", o.checks, "all, or a comma-separated list of check ids")->capture_default_str();
    verify_cmd->add_option("--limit", o.limit, "Sweep limit for 1S*, 1S+*, 1S^")->required();
    verify_cmd->add_option("--small-limit", o.small_limit, "Sweep limit for 1S and 1S+")->capture_default_str();
    verify_cmd->add_option("--efficient-kmax", o.efficient_kmax, "k range for thm_1_3")->capture_default_str();
    verify_cmd->add_option("--closed-form-kmax", o.closed_form_kmax, "k range for thm_2_3")->capture_default_str();
    verify_cmd->add_option("--structure-kmax", o.structure_kmax, "k range for prop_2_1")->capture_default_str();
    verify_cmd->add_option("--oracle-depth", o.depth, "Census depth for oracle_match")->capture_default_str();
    verify_cmd->add_option("--table", o.table, "Use a saved table for its operator set");
    verify_cmd->add_option("--out-dir", o.out_dir, "Write one report file per check");
    add_quiet(verify_cmd);

    auto* oracle = app.add_subcommand("oracle", "Exhaustive term census: k,terms,distinct_values,max_value");
    add_opset(oracle);
    oracle->add_option("--depth", o.depth, "Largest term length")->capture_default_str();
    oracle->add_option("--out", o.out, "Output path (default stdout)");
    oracle->add_option("--values", o.values_out, "Also write value,minimal_length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return cmd_compute(o);
        if (*witness_cmd) return cmd_witness(o);
        if (*ugly) return cmd_ugly(o);
        if (*maxrep) return cmd_maxrep(o);
        if (*hist) return cmd_hist(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*oracle) return cmd_oracle(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InsufficientRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const TableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}
