#include "qgw/errors.hpp"
#include "qgw/report.hpp"
#include "qgw/verify.hpp"
#include "qgw/wallcross.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidGeometry = 3;

struct CommandOptions {
    int n = 0;
    std::string l_csv;
    std::string lp_csv;
    int order = 10;
    std::string format = "json";
    std::string out_path;
};

std::vector<int> parse_csv(const std::string& text, const std::string& flag)
{
    std::vector<int> values;
    if (text.empty())
        return values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + item + "' is not an integer");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return values;
}

int order_cap()
{
    const char* env = std::getenv("QM_ORDER_MAX");
    if (env == nullptr)
        return 64;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        return 64;
    }
}

void add_common_options(CLI::App* cmd, CommandOptions& options)
{
    cmd->add_option("--n", options.n, "ambient projective space is P^{n-1}")->required();
    cmd->add_option("--l", options.l_csv, "hypersurface degrees, comma separated");
    cmd->add_option("--lp", options.lp_csv, "bundle degrees, comma separated");
    cmd->add_option("--order", options.order, "q-series truncation order")
        ->capture_default_str();
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path, "write output to this file instead of stdout");
}

int emit(const qgw::json& document, const CommandOptions& options)
{
    const std::string text = options.format == "table" ? qgw::render_table(document)
                                                       : qgw::render_json(document);
    if (options.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << options.out_path << "' for writing\n";
        return kExitInternal;
    }
    file << text;
    return file.good() ? 0 : kExitInternal;
}

int run_command(const std::string& command, const CommandOptions& options)
{
    if (options.order < 1) {
        std::cerr << "error: --order must be >= 1\n";
        return kExitUsage;
    }
    if (options.order > order_cap()) {
        std::cerr << "error: --order exceeds QM_ORDER_MAX = " << order_cap() << "\n";
        return kExitUsage;
    }

    qgw::GeometrySpec spec;
    spec.n = options.n;
    try {
        spec.l = parse_csv(options.l_csv, "--l");
        spec.lp = parse_csv(options.lp_csv, "--lp");
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        spec.validate();
    } catch (const qgw::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidGeometry;
    }

    try {
        const qgw::PotentialReport report = qgw::compute_report(spec, options.order);
        if (command == "ifun")
            return emit(qgw::ifun_to_json(report), options);
        if (command == "ck")
            return emit(qgw::ck_to_json(report), options);
        if (command == "potential")
            return emit(qgw::potential_to_json(report), options);
        return emit(qgw::report_to_json(report), options);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact genus-1 quasimap/Gromov-Witten potentials of local "
                 "Calabi-Yau complete intersections"};
    app.require_subcommand(1);

    CommandOptions options;
    CLI::App* ifun = app.add_subcommand("ifun", "I-function heads I0 and I1");
    CLI::App* ck = app.add_subcommand("ck", "initial constants C_0..C_{n-1}");
    CLI::App* potential = app.add_subcommand("potential", "quasimap potential");
    CLI::App* gw = app.add_subcommand("gw", "full Gromov-Witten report");
    for (CLI::App* cmd : {ifun, ck, potential, gw})
        add_common_options(cmd, options);
    CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (verify->parsed())
        return qgw::run_verification(std::cout) ? 0 : kExitInternal;
    for (CLI::App* cmd : {ifun, ck, potential, gw})
        if (cmd->parsed())
            return run_command(cmd->get_name(), options);
    return kExitUsage;
}
