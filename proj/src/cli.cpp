#include <sepstar/cli.hpp>

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include <sepstar/errors.hpp>
#include <sepstar/expression.hpp>
#include <sepstar/potentials.hpp>
#include <sepstar/serialize.hpp>

namespace sepstar
{

namespace
{

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Values given on the command line; anything unset falls back to the config
// file and then to the JobConfig defaults.
struct Flags {
    std::optional<std::string> config_path;
    std::optional<int> n, nu_order, jet_order, phi_order, samples;
    std::optional<std::string> potential, f, g, h;
    std::optional<std::uint64_t> seed;
    bool at_origin = false;
};

void add_flags(CLI::App &cmd, Flags &flags)
{
    cmd.add_option("--config", flags.config_path, "JSON file with job settings");
    cmd.add_option("--n", flags.n, "chart dimension");
    cmd.add_option("--potential", flags.potential, "flat, fubini-study, hyperbolic or an expression");
    cmd.add_option("--nu-order", flags.nu_order, "highest power of nu");
    cmd.add_option("--jet-order", flags.jet_order, "order to which coefficients are reported");
    cmd.add_option("--phi-order", flags.phi_order, "expansion order of the potential");
    cmd.add_option("--f", flags.f, "first function");
    cmd.add_option("--g", flags.g, "second function");
    cmd.add_option("--h", flags.h, "third function");
    cmd.add_option("--seed", flags.seed, "seed for random test inputs");
    cmd.add_option("--samples", flags.samples, "random inputs per verified identity");
    cmd.add_flag("--at-origin", flags.at_origin, "report constant coefficients only");
}

JobConfig read_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw config_error("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw config_error("config file must hold a JSON object");
    }
    JobConfig c;
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "n") {
                c.n = value.get<int>();
            } else if (key == "potential") {
                c.potential = value.get<std::string>();
            } else if (key == "nu_order") {
                c.nu_order = value.get<int>();
            } else if (key == "jet_order") {
                c.jet_order = value.get<int>();
            } else if (key == "phi_order") {
                c.phi_order = value.get<int>();
            } else if (key == "f") {
                c.f = value.get<std::string>();
            } else if (key == "g") {
                c.g = value.get<std::string>();
            } else if (key == "h") {
                c.h = value.get<std::string>();
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else if (key == "samples") {
                c.samples = value.get<int>();
            } else if (key == "at_origin") {
                c.at_origin = value.get<bool>();
            } else {
                throw config_error("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw config_error(std::string("config file: ") + e.what());
    }
    return c;
}

JobConfig resolve(const Flags &flags)
{
    JobConfig c = flags.config_path ? read_config_file(*flags.config_path) : JobConfig{};
    if (flags.n) c.n = *flags.n;
    if (flags.potential) c.potential = *flags.potential;
    if (flags.nu_order) c.nu_order = *flags.nu_order;
    if (flags.jet_order) c.jet_order = flags.jet_order;
    if (flags.phi_order) c.phi_order = flags.phi_order;
    if (flags.f) c.f = *flags.f;
    if (flags.g) c.g = *flags.g;
    if (flags.h) c.h = *flags.h;
    if (flags.seed) c.seed = *flags.seed;
    if (flags.samples) c.samples = *flags.samples;
    if (flags.at_origin) c.at_origin = true;

    if (c.n < 1 || c.n > kMaxDim) {
        throw config_error("n must be in 1.." + std::to_string(kMaxDim));
    }
    if (c.nu_order < 0) {
        throw config_error("nu order must be non-negative");
    }
    if (c.jet_order && *c.jet_order < 2) {
        throw config_error("jet order must be at least 2");
    }
    if (c.samples < 1) {
        throw config_error("samples must be positive");
    }
    return c;
}

int function_degree(const std::string &text, int n) { return text.empty() ? 0 : expression_degree(*parse_expression(text, n)); }

Jet require_function(const std::string &text, const char *flag, int n, int order)
{
    if (text.empty()) {
        throw config_error(std::string("missing ") + flag);
    }
    return evaluate_expression(text, n, order);
}

Json header(const char *command, const JobConfig &c, int jet_order, int phi_order)
{
    return {{"command", command}, {"potential", c.potential}, {"n", c.n},           {"nu_order", c.nu_order},
            {"jet_order", jet_order}, {"phi_order", phi_order}, {"base_point", "origin"}};
}

Symbol maybe_at_origin(const Symbol &s, bool at_origin) { return at_origin ? s.at_origin() : s; }
Jet maybe_at_origin(const Jet &j, bool at_origin) { return at_origin ? j.at_origin() : j; }

std::string index_key(std::initializer_list<int> indices)
{
    std::string s;
    for (int i : indices) {
        s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    }
    return s;
}

int run_job(const std::string &command, const JobConfig &c, std::ostream &out)
{
    const int n = c.n;
    const int nu = c.nu_order;
    int m = c.jet_order.value_or(2);
    if (!c.jet_order && (command == "star" || command == "lsymbol")) {
        m = std::max(2, function_degree(c.f, n) + function_degree(c.g, n) + function_degree(c.h, n));
    }
    // The product with h differentiates f * g up to nu more times.
    const int extra = c.h.empty() ? 0 : nu;
    const int p = c.phi_order.value_or(conservative_phi_order(m + extra, nu));
    if (p < 2) {
        throw config_error("phi order must be at least 2");
    }
    const GeometryCache geom(load_potential(c, p));
    const int work = geom.metric_order();

    if (command == "star") {
        const Jet f = require_function(c.f, "--f", n, work);
        const Jet g = require_function(c.g, "--g", n, work);
        StarResult result;
        if (c.h.empty()) {
            result = star(geom, f, g, nu, m);
        } else {
            const Jet h = evaluate_expression(c.h, n, work);
            result = star(geom, star(geom, f, g, nu, m + nu).series, NuSeries<Jet>({h}), nu, m);
        }
        Json j = header("star", c, m, p);
        j["series"] = series_json(result.series);
        j["text"] = series_text(result.series);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (command == "lsymbol") {
        const Jet f = require_function(c.f, "--f", n, work);
        NuSeries<Symbol> s = left_mult_symbol(geom, NuSeries<Jet>({f}), nu, m);
        for (auto &comp : s.components) {
            comp = maybe_at_origin(comp.truncated(m), c.at_origin);
        }
        Json j = header("lsymbol", c, m, p);
        j["series"] = series_json(s);
        j["text"] = series_text(s);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (command == "tensor-t") {
        TensorT t = tensor_T(geom, nu, m);
        for (auto &comp : t.series.components) {
            comp = maybe_at_origin(comp, c.at_origin);
        }
        Json j = header("tensor-t", c, m, p);
        j["series"] = series_json(t.series);
        j["text"] = series_text(t.series);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (command == "geom") {
        auto report = [&](const Jet &x) { return jet_json(maybe_at_origin(x.truncated(m), c.at_origin)); };
        Json metric = Json::object(), inverse = Json::object(), christoffel = Json::object(), curvature = Json::object();
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
                metric[index_key({k, l})] = report(geom.g_low(k, l));
                inverse[index_key({l, k})] = report(geom.g_up(l, k));
            }
        }
        for (int t = 0; t < n; ++t) {
            for (int l = 0; l < n; ++l) {
                for (int q = 0; q < n; ++q) {
                    christoffel[index_key({t, l, q})] = report(geom.christoffel_bar(t, l, q));
                }
            }
        }
        for (int k = 0; k < n; ++k) {
            for (int pp = 0; pp < n; ++pp) {
                for (int l = 0; l < n; ++l) {
                    for (int q = 0; q < n; ++q) {
                        curvature[index_key({k, pp, l, q})] = report(geom.curvature_low(k, pp, l, q));
                    }
                }
            }
        }
        Json j = header("geom", c, m, p);
        j["metric"] = metric;
        j["inverse_metric"] = inverse;
        j["christoffel_bar"] = christoffel;
        j["curvature"] = curvature;
        j["gamma"] = symbol_json(maybe_at_origin(gamma_symbol(geom).truncated(m), c.at_origin));
        j["rho22"] = symbol_json(maybe_at_origin(rho_symbol(geom, 2, 2, m), c.at_origin));
        out << j.dump(2) << "\n";
        return 0;
    }
    if (command == "verify") {
        VerifyOptions options;
        options.seed = c.seed;
        options.samples = c.samples;
        options.jet_order = m;
        options.potential_label = c.potential;
        options.expand_potential = [c](int order) { return load_potential(c, order); };
        const VerificationReport report = verify_all(geom, nu, options);
        out << report_json(report).dump(2) << "\n";
        return report.passed() ? 0 : 1;
    }
    throw config_error("unknown command " + command);
}

} // namespace

Jet load_potential(const JobConfig &config, int order)
{
    if (is_builtin_potential(config.potential)) {
        return builtin_potential(config.potential, config.n, order);
    }
    return evaluate_expression(config.potential, config.n, order);
}

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Star products with separation of variables on a pseudo-Kaehler chart"};
    // --h names the third function, so help is long-form only.
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);
    Flags flags;
    const std::vector<std::pair<const char *, const char *>> commands{
        {"star", "f * g as a series in nu"},
        {"lsymbol", "symbol of left star-multiplication by f"},
        {"tensor-t", "components of the tensor T"},
        {"geom", "metric, inverse, Christoffel symbols, curvature, gamma and rho_{2,2}"},
        {"verify", "run the identity, star-law and cross-check suites"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->set_help_flag("--help", "print this help");
        add_flags(*sub, flags);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run_job(command, resolve(flags), out);
    } catch (const parse_error &e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const config_error &e) {
        err << "config error: " << e.what() << "\n";
    } catch (const degenerate_metric &e) {
        err << "error: " << e.what() << "\n";
    } catch (const order_exhausted &e) {
        err << "error: " << e.what() << " (raise --phi-order)\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

} // namespace sepstar
