#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "polarwave/experiments.hpp"

namespace {

void usage() {
    std::fprintf(stderr,
                 "usage: polarwave <experiment> [--config <path>] [--set key=value]... "
                 "[--out <path>]\n"
                 "experiments: dispersion fractions interaction-strength "
                 "defect-scattering\n"
                 "             impurity-scattering ls-oracle pump-probe "
                 "symmetric-pump\n"
                 "             bistability correlation channels\n");
}

} // namespace

int main(int argc, char** argv) {
    using namespace polarwave;
    try {
        if (argc < 2) {
            usage();
            return 2;
        }
        const std::string experiment = argv[1];
        if (experiment == "-h" || experiment == "--help") {
            usage();
            return 0;
        }

        std::string config_path;
        std::string out_path = "out.csv";
        std::vector<std::string> overrides;
        for (int i = 2; i < argc; ++i) {
            const std::string arg = argv[i];
            auto next = [&]() -> std::string {
                if (i + 1 >= argc)
                    throw Error(ErrorKind::InvalidArgument, arg + " needs a value");
                return argv[++i];
            };
            if (arg == "--config") config_path = next();
            else if (arg == "--set") overrides.push_back(next());
            else if (arg == "--out") out_path = next();
            else throw Error(ErrorKind::InvalidArgument, "unknown option " + arg);
        }

        RunConfig cfg = parse_config_file(config_path, overrides);
        cfg.experiment = experiment_from_name(experiment);
        cfg.experiment_name_raw = experiment;
        cfg.output_path = out_path;
        if (cfg.experiment == Experiment::LsOracle && !cfg.k_explicit) {
            // balance point of regulator vs zone-cutoff systematics for the
            // coarsest grid in the convergence set
            cfg.k = 32.0 * 2.0 * M_PI / (1024.0 * cfg.params.a);
        }

        const SweepTable table = run_experiment(cfg);
        write_csv(table, cfg.output_path);
        std::printf("wrote %s (%zu rows, %zu columns)\n", cfg.output_path.c_str(),
                    table.rows.size(), table.header.size());
        return 0;
    } catch (const polarwave::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: internal: %s\n", e.what());
        return 1;
    }
}
