// Command line front end; talks to the library through the C API only.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fintop.h"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct SpaceDeleter {
    void operator()(fintop_space* s) const { fintop_space_free(s); }
};
struct MapDeleter {
    void operator()(fintop_map* m) const { fintop_map_free(m); }
};
using SpacePtr = std::unique_ptr<fintop_space, SpaceDeleter>;
using MapPtr = std::unique_ptr<fintop_map, MapDeleter>;

int input_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return exit_input_error;
}

bool read_input(const std::string& path, std::string& out, std::string& error) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        out = buffer.str();
        return true;
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        error = "cannot open " + path;
        return false;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    out = buffer.str();
    return true;
}

SpacePtr load_space(const std::string& path, fintop_status* status = nullptr) {
    std::string text, error;
    if (!read_input(path, text, error)) {
        std::cerr << "error: " << error << "\n";
        if (status) *status = FINTOP_ERR_PARSE;
        return nullptr;
    }
    fintop_space* space = nullptr;
    const fintop_status rc = fintop_space_from_json(text.c_str(), &space);
    if (status) *status = rc;
    if (rc != FINTOP_OK) {
        if (!status || rc == FINTOP_ERR_PARSE || rc == FINTOP_ERR_INVALID_ARGUMENT)
            std::cerr << "error: " << path << ": " << fintop_last_error() << "\n";
        return nullptr;
    }
    return SpacePtr(space);
}

MapPtr load_map(const std::string& path) {
    std::string text, error;
    if (!read_input(path, text, error)) {
        std::cerr << "error: " << error << "\n";
        return nullptr;
    }
    fintop_map* map = nullptr;
    if (fintop_map_from_json(text.c_str(), &map) != FINTOP_OK) {
        std::cerr << "error: " << path << ": " << fintop_last_error() << "\n";
        return nullptr;
    }
    return MapPtr(map);
}

bool parse_point_set(const std::string& text, std::uint32_t& mask, std::string& error) {
    mask = 0;
    if (text.empty()) return true;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int point = -1;
        try {
            point = std::stoi(item, &used);
        } catch (const std::exception&) {
            error = "cannot parse point \"" + item + "\"";
            return false;
        }
        if (used != item.size() || point < 0 || point > 31) {
            error = "cannot parse point \"" + item + "\"";
            return false;
        }
        mask |= std::uint32_t{1} << point;
    }
    return true;
}

std::vector<int> mask_points(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) out.push_back(i);
    return out;
}

std::string set_text(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int p : mask_points(mask)) {
        if (!first) out += ", ";
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

std::string space_json_text(const fintop_space* space) {
    char* text = nullptr;
    if (fintop_space_to_json(space, &text) != FINTOP_OK) return "{}";
    std::string out(text);
    fintop_string_free(text);
    return out;
}

std::string map_json_text(const fintop_map* map) {
    char* text = nullptr;
    if (fintop_map_to_json(map, &text) != FINTOP_OK) return "{}";
    std::string out(text);
    fintop_string_free(text);
    return out;
}

std::string assignment_text(const fintop_map* map) {
    std::string out = "[";
    for (int p = 0; p < fintop_map_dom_points(map); ++p) {
        int v = 0;
        fintop_map_value(map, p, &v);
        if (p) out += ", ";
        out += std::to_string(v);
    }
    return out + "]";
}

std::vector<std::vector<int>> partition_blocks(const fintop_map* projection) {
    std::vector<std::vector<int>> blocks(fintop_map_cod_points(projection));
    for (int p = 0; p < fintop_map_dom_points(projection); ++p) {
        int block = 0;
        fintop_map_value(projection, p, &block);
        blocks[block].push_back(p);
    }
    return blocks;
}

int run_validate(const std::string& path, bool json_output) {
    fintop_status status = FINTOP_OK;
    SpacePtr space = load_space(path, &status);
    if (space) {
        if (json_output) {
            ordered_json j;
            j["valid"] = true;
            j["space"] = ordered_json::parse(space_json_text(space.get()));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "valid\n" << space_json_text(space.get()) << "\n";
        }
        return exit_ok;
    }
    if (status == FINTOP_ERR_PARSE || status == FINTOP_ERR_INVALID_ARGUMENT)
        return exit_input_error;
    if (json_output) {
        ordered_json j;
        j["valid"] = false;
        j["error"] = fintop_last_error();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "invalid: " << fintop_last_error() << "\n";
    }
    return exit_check_failed;
}

int run_closure(const std::string& path, const std::string& set_text_arg, bool json_output) {
    SpacePtr space = load_space(path);
    if (!space) return exit_input_error;
    std::uint32_t set = 0;
    std::string error;
    if (!parse_point_set(set_text_arg, set, error)) return input_error(error);
    std::uint32_t result = 0;
    if (fintop_closure(space.get(), set, &result) != FINTOP_OK)
        return input_error(fintop_last_error());
    if (json_output) {
        ordered_json j;
        j["set"] = mask_points(set);
        j["closure"] = mask_points(result);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << set_text(result) << "\n";
    }
    return exit_ok;
}

int run_dense(const std::string& path, const std::string& set_text_arg, bool json_output) {
    SpacePtr space = load_space(path);
    if (!space) return exit_input_error;
    std::uint32_t set = 0;
    std::string error;
    if (!parse_point_set(set_text_arg, set, error)) return input_error(error);
    int dense = 0;
    if (fintop_is_dense(space.get(), set, &dense) != FINTOP_OK)
        return input_error(fintop_last_error());
    if (json_output) {
        ordered_json j;
        j["set"] = mask_points(set);
        j["dense"] = dense != 0;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (dense ? "true" : "false") << "\n";
    }
    return exit_ok;
}

int run_hausdorff(const std::string& path, bool json_output) {
    SpacePtr space = load_space(path);
    if (!space) return exit_input_error;
    int hausdorff = 0;
    if (fintop_is_hausdorff(space.get(), &hausdorff) != FINTOP_OK)
        return input_error(fintop_last_error());
    if (json_output) {
        ordered_json j;
        j["hausdorff"] = hausdorff != 0;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (hausdorff ? "true" : "false") << "\n";
    }
    return exit_ok;
}

int run_reflect(const std::string& path, const std::string& strategy, bool json_output) {
    SpacePtr space = load_space(path);
    if (!space) return exit_input_error;
    fintop_strategy chosen = FINTOP_STRATEGY_COMPONENTS;
    if (strategy == "clopen") chosen = FINTOP_STRATEGY_CLOPEN;
    if (strategy == "maps-oracle") chosen = FINTOP_STRATEGY_MAPS_ORACLE;
    fintop_space* reflected = nullptr;
    fintop_map* projection = nullptr;
    if (fintop_reflect(space.get(), chosen, &reflected, &projection) != FINTOP_OK)
        return input_error(fintop_last_error());
    SpacePtr reflected_owner(reflected);
    MapPtr projection_owner(projection);
    const auto blocks = partition_blocks(projection);
    if (json_output) {
        ordered_json j;
        j["partition"] = blocks;
        j["space"] = ordered_json::parse(space_json_text(reflected));
        j["projection"] = ordered_json::parse(map_json_text(projection));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "partition:";
        for (const auto& block : blocks) {
            std::uint32_t mask = 0;
            for (int p : block) mask |= std::uint32_t{1} << p;
            std::cout << " " << set_text(mask);
        }
        std::cout << "\n";
        std::cout << "space: " << space_json_text(reflected) << "\n";
        std::cout << "projection: " << assignment_text(projection) << "\n";
    }
    return exit_ok;
}

int run_factor(const std::string& space_path, const std::string& map_path, bool json_output) {
    SpacePtr space = load_space(space_path);
    if (!space) return exit_input_error;
    MapPtr map = load_map(map_path);
    if (!map) return exit_input_error;
    fintop_space* dom = nullptr;
    if (fintop_map_dom(map.get(), &dom) != FINTOP_OK) return input_error(fintop_last_error());
    SpacePtr dom_owner(dom);
    if (!fintop_space_equal(space.get(), dom))
        return input_error("map domain differs from the given space");
    fintop_map* factored = nullptr;
    fintop_map* projection = nullptr;
    if (fintop_factor(map.get(), &factored, &projection) != FINTOP_OK)
        return input_error(fintop_last_error());
    MapPtr factored_owner(factored);
    MapPtr projection_owner(projection);
    if (json_output) {
        ordered_json j;
        j["projection"] = ordered_json::parse(map_json_text(projection));
        j["factorization"] = ordered_json::parse(map_json_text(factored));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "projection: " << assignment_text(projection) << "\n";
        std::cout << "factorization: " << assignment_text(factored) << "\n";
    }
    return exit_ok;
}

int run_epi(const std::string& map_path, const std::string& category, int bound,
            bool brute_force, bool json_output) {
    MapPtr map = load_map(map_path);
    if (!map) return exit_input_error;
    const bool top = category == "top";
    const bool brute = brute_force || top;
    int is_epi = 0;
    int warned = 0;
    MapPtr g_owner, h_owner;
    if (brute) {
        if (bound <= 0)
            bound = top ? 3 : std::max(1, 2 * fintop_map_cod_points(map.get()));
        fintop_map* g = nullptr;
        fintop_map* h = nullptr;
        const fintop_status rc = fintop_epi_bruteforce(
            map.get(), top ? FINTOP_CATEGORY_TOP : FINTOP_CATEGORY_HAUS, bound, &is_epi, &warned,
            &g, &h);
        if (rc != FINTOP_OK) return input_error(fintop_last_error());
        g_owner.reset(g);
        h_owner.reset(h);
        if (warned)
            std::cerr << "warning: bound " << bound
                      << " is below the completeness threshold of twice the codomain size\n";
    } else {
        if (fintop_epi_dense(map.get(), &is_epi) != FINTOP_OK)
            return input_error(fintop_last_error());
    }
    if (json_output) {
        ordered_json j;
        j["epi"] = is_epi != 0;
        j["method"] = brute ? "brute-force" : "dense-test";
        if (brute) {
            j["bound"] = bound;
            j["bound_warning"] = warned != 0;
        }
        if (g_owner) {
            j["counterexample"]["g"] = ordered_json::parse(map_json_text(g_owner.get()));
            j["counterexample"]["h"] = ordered_json::parse(map_json_text(h_owner.get()));
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (is_epi ? "epi" : "not epi") << "\n";
        std::cout << "method: " << (brute ? "brute-force" : "dense-test") << "\n";
        if (g_owner) {
            std::cout << "g: " << map_json_text(g_owner.get()) << "\n";
            std::cout << "h: " << map_json_text(h_owner.get()) << "\n";
        }
    }
    return exit_ok;
}

int run_witness(const std::string& map_path, bool json_output) {
    MapPtr map = load_map(map_path);
    if (!map) return exit_input_error;
    int found = 0;
    fintop_map* g = nullptr;
    fintop_map* h = nullptr;
    if (fintop_non_epi_witness(map.get(), &found, &g, &h) != FINTOP_OK)
        return input_error(fintop_last_error());
    MapPtr g_owner(g);
    MapPtr h_owner(h);
    if (json_output) {
        ordered_json j;
        if (found) {
            j["witness"]["g"] = ordered_json::parse(map_json_text(g));
            j["witness"]["h"] = ordered_json::parse(map_json_text(h));
        } else {
            j["witness"] = nullptr;
        }
        std::cout << j.dump() << "\n";
    } else if (found) {
        std::cout << "g: " << map_json_text(g) << "\n";
        std::cout << "h: " << map_json_text(h) << "\n";
    } else {
        std::cout << "none\n";
    }
    return exit_ok;
}

int run_enumerate(int n, bool up_to_homeo, bool json_output) {
    if (n == 5)
        std::cerr << "warning: enumerating 5 points goes beyond the default limit of 4\n";
    fintop_space** spaces = nullptr;
    size_t count = 0;
    if (fintop_enumerate_topologies(n, up_to_homeo ? 1 : 0, &spaces, &count) != FINTOP_OK)
        return input_error(fintop_last_error());
    if (json_output) {
        ordered_json j;
        j["points"] = n;
        j["up_to_homeo"] = up_to_homeo;
        j["count"] = count;
        ordered_json list = ordered_json::array();
        for (size_t i = 0; i < count; ++i)
            list.push_back(ordered_json::parse(space_json_text(spaces[i])));
        j["spaces"] = std::move(list);
        std::cout << j.dump() << "\n";
    } else {
        for (size_t i = 0; i < count; ++i) std::cout << space_json_text(spaces[i]) << "\n";
    }
    fintop_space_array_free(spaces, count);
    return exit_ok;
}

int run_suite(int max_n, const std::string& fault, bool json_output) {
    char* report = nullptr;
    int passed = 0;
    const fintop_fault chosen =
        fault == "bad-reflection" ? FINTOP_FAULT_BAD_REFLECTION : FINTOP_FAULT_NONE;
    if (fintop_run_suite(max_n, chosen, json_output ? 1 : 0, &report, &passed) != FINTOP_OK)
        return input_error(fintop_last_error());
    std::cout << report;
    if (json_output) std::cout << "\n";
    fintop_string_free(report);
    return passed ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite topological spaces: validation, reflection, epi checks"};
    app.require_subcommand(1);
    std::string output_format = "text";
    app.add_option("--output", output_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string space_path, map_path, set_arg, strategy = "components", category = "haus";
    std::string fault;
    int bound = 0, enum_n = 0, max_n = 3;
    bool brute_force = false, up_to_homeo = false;

    CLI::App* validate = app.add_subcommand("validate", "check a space document");
    validate->add_option("space", space_path, "space document path or -")->required();

    CLI::App* closure_cmd = app.add_subcommand("closure", "closure of a point set");
    closure_cmd->add_option("space", space_path)->required();
    closure_cmd->add_option("--set", set_arg, "comma separated points, e.g. 0,2");

    CLI::App* dense = app.add_subcommand("dense", "is a point set dense");
    dense->add_option("space", space_path)->required();
    dense->add_option("--set", set_arg, "comma separated points");

    CLI::App* hausdorff = app.add_subcommand("hausdorff", "is the space Hausdorff");
    hausdorff->add_option("space", space_path)->required();

    CLI::App* reflect = app.add_subcommand("reflect", "Hausdorff reflection");
    reflect->add_option("space", space_path)->required();
    reflect->add_option("--strategy", strategy, "partition strategy")
        ->check(CLI::IsMember({"components", "clopen", "maps-oracle"}))
        ->capture_default_str();

    CLI::App* factor = app.add_subcommand("factor", "factor a map through the reflection");
    factor->add_option("space", space_path)->required();
    factor->add_option("map", map_path)->required();

    CLI::App* epi = app.add_subcommand("epi", "decide whether a map is epi");
    epi->add_option("map", map_path)->required();
    epi->add_option("--category", category, "ambient category")
        ->check(CLI::IsMember({"haus", "top"}))
        ->capture_default_str();
    epi->add_option("--bound", bound, "brute-force codomain size bound")
        ->check(CLI::PositiveNumber);
    epi->add_flag("--brute-force", brute_force, "exhaust small codomains instead of the dense test");

    CLI::App* witness = app.add_subcommand("witness", "separating cospan for a non-epi map");
    witness->add_option("map", map_path)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "all topologies on a small carrier");
    enumerate->add_option("--n", enum_n, "carrier size")->required();
    enumerate->add_flag("--up-to-homeo", up_to_homeo, "one space per homeomorphism class");

    CLI::App* suite = app.add_subcommand("suite", "run the self-check suite");
    suite->add_option("--max-n", max_n, "carrier size cap")->capture_default_str();
    suite->add_option("--inject-fault", fault, "self-test hook")
        ->check(CLI::IsMember({"bad-reflection"}));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    const bool json_output = output_format == "json";
    if (validate->parsed()) return run_validate(space_path, json_output);
    if (closure_cmd->parsed()) return run_closure(space_path, set_arg, json_output);
    if (dense->parsed()) return run_dense(space_path, set_arg, json_output);
    if (hausdorff->parsed()) return run_hausdorff(space_path, json_output);
    if (reflect->parsed()) return run_reflect(space_path, strategy, json_output);
    if (factor->parsed()) return run_factor(space_path, map_path, json_output);
    if (epi->parsed()) return run_epi(map_path, category, bound, brute_force, json_output);
    if (witness->parsed()) return run_witness(map_path, json_output);
    if (enumerate->parsed()) return run_enumerate(enum_n, up_to_homeo, json_output);
    if (suite->parsed()) return run_suite(max_n, fault, json_output);
    return exit_input_error;
}
