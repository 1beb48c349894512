#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "rllsidc/analysis.hpp"
#include "rllsidc/campaign.hpp"
#include "rllsidc/channel.hpp"
#include "rllsidc/errors.hpp"
#include "rllsidc/indel_decoder.hpp"
#include "rllsidc/oracle.hpp"
#include "rllsidc/rll_front.hpp"
#include "rllsidc/sidc_core.hpp"

namespace rllsidc::cli {

namespace {

struct CodeFlags {
    std::size_t k = 0;
    std::size_t r = 0;
    std::optional<std::uint64_t> d;
    std::optional<std::uint64_t> b;

    void attach(CLI::App* app, bool with_b = true) {
        app->add_option("--k", k, "message length of the embedded RLL word")->required();
        app->add_option("--r", r, "maximum run length")->required();
        app->add_option("--d", d, "coefficient a_rhat (default 2^(rhat-1)-1)");
        if (with_b) app->add_option("--b", b, "residue (default 0)");
    }
    CodeParams derive() const { return derive_params(k, r, d, b); }
};

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

// Applies f to every input line; per-line data errors go to err.
int stream_lines(std::istream& in, std::ostream& out, std::ostream& err,
                 const std::function<std::string(const std::string&, std::uint64_t)>& f) {
    int code = kOk;
    std::string line;
    for (std::uint64_t no = 1; std::getline(in, line); ++no) {
        try {
            out << f(chomp(line), no) << '\n';
        } catch (const DataError& e) {
            err << "ERROR " << no << ' ' << e.what() << '\n';
            code = kData;
        } catch (const RangeError& e) {
            err << "ERROR " << no << ' ' << e.what() << '\n';
            code = kData;
        }
    }
    return code;
}

int report(std::ostream& out, const CheckReport& rep) {
    out << rep.line() << '\n' << rep.summary_line() << '\n';
    return rep.pass ? kOk : kVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"RLL-SIDC codec toolkit", "rllsidc"};
    app.require_subcommand(1);
    std::function<int()> action;

    // params
    CodeFlags pf;
    auto* params = app.add_subcommand("params", "derive and print code parameters");
    pf.attach(params);
    params->callback([&] {
        action = [&] {
            const CodeParams cp = pf.derive();
            out << to_key_value(cp) << "d_min=" << cp.d_min() << '\n' << "d_max=" << cp.d_max() << '\n';
            return int{kOk};
        };
    });

    // encode / decode
    CodeFlags ef, df;
    bool enc_raw = false, dec_raw = false;
    auto* encode = app.add_subcommand("encode", "encode stdin lines");
    ef.attach(encode);
    encode->add_flag("--raw", enc_raw, "input is y in S_{k,r}; skip the front end");
    encode->callback([&] {
        action = [&] {
            const CodeParams cp = ef.derive();
            return stream_lines(in, out, err, [&](const std::string& line, std::uint64_t) {
                const BitSeq v = BitSeq::parse(line);
                return (enc_raw ? embed_encode(cp, v) : encode_message(cp, v)).to_string();
            });
        };
    });
    auto* decode = app.add_subcommand("decode", "correct and decode stdin lines");
    df.attach(decode);
    decode->add_flag("--raw", dec_raw, "print the corrected message part y");
    decode->callback([&] {
        action = [&] {
            const CodeParams cp = df.derive();
            return stream_lines(in, out, err, [&](const std::string& line, std::uint64_t) {
                const BitSeq v = BitSeq::parse(line);
                if (dec_raw) return correct(cp, v).slice(cp.m(), cp.k()).to_string();
                return decode_message(cp, v).to_string();
            });
        };
    });

    // corrupt
    std::uint64_t seed = 0;
    std::string op = "any";
    auto* corrupt = app.add_subcommand("corrupt", "apply one seeded insertion or deletion per line");
    corrupt->add_option("--seed", seed, "base seed")->required();
    corrupt->add_option("--op", op, "insert, delete or any")->check(CLI::IsMember({"insert", "delete", "any"}));
    corrupt->callback([&] {
        action = [&] {
            return stream_lines(in, out, err, [&](const std::string& line, std::uint64_t no) {
                const BitSeq v = BitSeq::parse(line);
                const std::uint64_t s = trial_seed(seed, no - 1);
                ChannelEvent e;
                if (op == "insert")
                    e = random_event(v.size(), s, EditKind::insertion);
                else if (op == "delete")
                    e = random_event(v.size(), s, EditKind::deletion);
                else
                    e = random_event(v.size(), s);
                const BitSeq w = apply_event(v, e);
                err << "EVENT " << no << ' ' << format_event(e) << '\n';
                return w.to_string();
            });
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);

    std::size_t fr_k = 0, fr_r = 0;
    auto* front = verify->add_subcommand("front-roundtrip", "exhaustive front-end round trip");
    front->add_option("--k", fr_k)->required();
    front->add_option("--r", fr_r)->required();
    front->callback([&] { action = [&] { return report(out, check_front_roundtrip(fr_k, fr_r)); }; });

    std::size_t sd_n = 0, sd_rhat = 0;
    std::uint64_t sd_d = 0;
    auto* sidc = verify->add_subcommand("sidc", "deletion-ball disjointness for every residue");
    sidc->add_option("--n", sd_n)->required();
    sidc->add_option("--rhat", sd_rhat)->required();
    sidc->add_option("--d", sd_d)->required();
    sidc->callback([&] { action = [&] { return report(out, check_sidc_all_residues(sd_n, sd_rhat, sd_d)); }; });

    std::size_t er_k = 0, er_r = 0;
    std::optional<std::uint64_t> er_d;
    SamplingPlan plan;
    auto* enc_rll = verify->add_subcommand("encoder-rll", "encoder output membership and run length");
    enc_rll->add_option("--k", er_k)->required();
    enc_rll->add_option("--r", er_r)->required();
    enc_rll->add_option("--d", er_d, "single d (default: every valid d)");
    enc_rll->add_option("--trials", plan.trials, "sampled trials when k > 10");
    enc_rll->add_option("--seed", plan.seed, "sampling seed");
    enc_rll->callback([&] {
        action = [&] {
            const CodeParams cp = derive_params(er_k, er_r, std::nullopt, std::nullopt);
            std::vector<std::uint64_t> ds;
            if (er_d) {
                ds.push_back(*er_d);
            } else {
                for (std::uint64_t d = cp.d_min(); d <= cp.d_max(); ++d) ds.push_back(d);
            }
            int code = kOk;
            for (std::uint64_t d : ds)
                if (report(out, check_encoder_rll(er_k, er_r, d, plan)) != kOk) code = kVerification;
            return code;
        };
    });

    std::size_t gc_rhat = 0;
    auto* gap = verify->add_subcommand("gap-condition", "parity collision sweep over (k, d)");
    gap->add_option("--rhat", gc_rhat)->required();
    gap->callback([&] { action = [&] { return report(out, to_check_report(gap_condition_check(gc_rhat))); }; });

    CodeFlags cf;
    std::uint64_t cp_seed = 0, cp_trials = 100000;
    auto* camp = verify->add_subcommand("campaign", "seeded encode, corrupt, decode trials");
    cf.attach(camp);
    camp->add_option("--seed", cp_seed)->required();
    camp->add_option("--trials", cp_trials);
    camp->callback([&] {
        action = [&] {
            const CampaignReport rep = run_campaign(cf.derive(), cp_seed, cp_trials);
            out << "CHECK campaign k=" << rep.k << ",r=" << rep.r << ",seed=" << rep.seed
                << (rep.failures == 0 ? " PASS" : " FAIL") << '\n'
                << rep.line() << '\n';
            return rep.failures == 0 ? int{kOk} : int{kVerification};
        };
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "redundancy tables and code sizes");
    analyze->require_subcommand(1);
    std::size_t n_min = 14, n_max = 1024;
    auto* red = analyze->add_subcommand("redundancy", "CSV of redundancy against the lower bound");
    red->add_option("--n-min", n_min);
    red->add_option("--n-max", n_max);
    red->callback([&] {
        action = [&] {
            if (n_min > n_max) throw RangeError("--n-min exceeds --n-max");
            std::vector<AnalysisRow> rows;
            for (std::size_t n = n_min; n <= n_max; ++n) rows.push_back(redundancy_row(n));
            out << emit_csv(rows);
            return int{kOk};
        };
    });
    std::size_t ct_n = 0, ct_rhat = 0;
    std::uint64_t ct_d = 0, ct_b = 0;
    auto* count = analyze->add_subcommand("count", "number of codewords of C_b(n, rhat, d)");
    count->add_option("--n", ct_n)->required();
    count->add_option("--rhat", ct_rhat)->required();
    count->add_option("--d", ct_d)->required();
    count->add_option("--b", ct_b);
    count->callback([&] {
        action = [&] {
            out << "count=" << enumerate_codewords(ct_n, ct_rhat, ct_d, ct_b).size() << '\n';
            return int{kOk};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        return action ? action() : int{kUsage};
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    }
}

}  // namespace rllsidc::cli
