// Command-line surface for exact free-group computation: reduced-word
// arithmetic, abelianization, Stallings subgroup graphs, finite-index
// enumeration and the existence criteria. Output is deterministic; JSON
// objects have sorted keys.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fg/abelian.hpp"
#include "fg/graph.hpp"
#include "fg/subgroup.hpp"
#include "fg/word.hpp"

using nlohmann::json;

namespace {

fg::Alphabet make_alphabet(int rank, bool rank_given, const std::string& names_file) {
    if (names_file.empty())
        return fg::Alphabet::standard(rank);
    std::ifstream in(names_file);
    if (!in)
        throw std::invalid_argument("cannot open names file: " + names_file);
    std::vector<std::string> names;
    std::string tok;
    while (in >> tok)
        names.push_back(tok);
    fg::Alphabet alphabet(names);
    if (rank_given && rank != alphabet.rank())
        throw std::invalid_argument("names file rank disagrees with -n");
    return alphabet;
}

std::vector<fg::Word> parse_words(const std::vector<std::string>& texts,
                                  const fg::Alphabet& alphabet) {
    std::vector<fg::Word> words;
    words.reserve(texts.size());
    for (const std::string& t : texts)
        words.push_back(fg::parse_word(t, alphabet));
    return words;
}

long long enumeration_cap(long long flag_value) {
    if (flag_value > 0)
        return flag_value;
    if (const char* env = std::getenv("FREEGROUP_ENUM_CAP"))
        return std::stoll(env);
    return fg::kDefaultEnumerationCap;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string basis_line(const fg::Subgroup& s, const fg::Alphabet& alphabet) {
    std::string out;
    for (size_t i = 0; i < s.basis.size(); ++i) {
        if (i)
            out += ", ";
        out += fg::format_word(s.basis[i], alphabet);
    }
    return out;
}

void report_subgroup(const fg::Subgroup& s, const fg::Alphabet& alphabet,
                     const std::string& format, const std::string& note = "") {
    if (format == "json") {
        print_json(fg::subgroup_to_json(s, alphabet));
    } else if (format == "dot") {
        std::cout << fg::to_dot(s.graph, alphabet);
    } else {
        std::cout << "index: "
                  << (s.index.has_value() ? std::to_string(*s.index) : "infinite")
                  << "\n";
        std::cout << "rank: " << s.rank << "\n";
        std::cout << "normal: " << bool_text(fg::is_normal(s)) << "\n";
        std::cout << "basis: " << basis_line(s, alphabet) << "\n";
        if (!note.empty())
            std::cout << note << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in finitely generated free groups"};
    app.require_subcommand(1);

    int rank = 2;
    std::string names_file;
    std::string format = "text";
    long long cap_flag = 0;
    std::vector<CLI::Option*> rank_options;
    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        rank_options.push_back(cmd->add_option("-n,--rank", rank, "ambient free-group rank"));
        cmd->add_option("--names", names_file, "file of generator names");
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    std::string word_text, conjugator_text;
    std::vector<std::string> gen_texts;
    int sheets = 1, cover_k = 1, embed_m = 2, inf_r = 1;
    long long lhs = 0, rhs = 0;

    CLI::App* reduce = app.add_subcommand("reduce", "reduce a word to normal form");
    add_common(reduce);
    reduce->add_option("word", word_text, "word to reduce")->required();

    CLI::App* abelianize = app.add_subcommand("abelianize", "exponent-sum vector of a word");
    add_common(abelianize);
    abelianize->add_option("word", word_text, "word")->required();

    CLI::App* subgroup = app.add_subcommand("subgroup", "build a subgroup from generators");
    add_common(subgroup);
    subgroup->add_option("generators", gen_texts, "generating words");

    CLI::App* member = app.add_subcommand("member", "test membership in a subgroup");
    add_common(member, false);
    member->add_option("-w,--word", word_text, "word to test")->required();
    member->add_option("generators", gen_texts, "generating words");

    CLI::App* enumerate = app.add_subcommand("enumerate", "all subgroups of a given finite index");
    add_common(enumerate);
    enumerate->add_option("-e,--index", sheets, "index (number of sheets)")->required();
    enumerate->add_option("--cap", cap_flag, "candidate tuple cap override");

    CLI::App* classes = app.add_subcommand("classes", "conjugacy classes at a given index");
    add_common(classes);
    classes->add_option("-e,--index", sheets, "index (number of sheets)")->required();
    classes->add_option("--cap", cap_flag, "candidate tuple cap override");

    CLI::App* normal = app.add_subcommand("normal", "test normality of a subgroup");
    add_common(normal, false);
    normal->add_option("generators", gen_texts, "generating words");

    CLI::App* conjugate = app.add_subcommand("conjugate", "conjugate a subgroup by a word");
    add_common(conjugate);
    conjugate->add_option("-w,--word", conjugator_text, "conjugating word")->required();
    conjugate->add_option("generators", gen_texts, "generating words");

    CLI::App* construct = app.add_subcommand("construct", "named subgroup constructions");
    construct->require_subcommand(1);
    CLI::App* cyclic = construct->add_subcommand("cyclic-cover", "cyclic normal cover of F_n");
    add_common(cyclic);
    cyclic->add_option("-k,--sheets", cover_k, "number of sheets")->required();
    CLI::App* embed = construct->add_subcommand("embed-f2", "embed F_m into F_2");
    embed->add_option("-m,--rank", embed_m, "rank to embed")->required();
    embed->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    CLI::App* infinite = construct->add_subcommand("infinite-example",
                                                   "finitely generated infinite-index subgroup of F_2");
    infinite->add_option("-r,--rank", inf_r, "rank of the example")->required();
    infinite->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    CLI::App* exists = app.add_subcommand("exists", "existence criteria");
    exists->require_subcommand(1);
    CLI::App* ex_sub = exists->add_subcommand("subgroup", "does F_ambient contain F_sub?");
    ex_sub->add_option("--ambient", lhs, "ambient rank")->required();
    ex_sub->add_option("--sub", rhs, "subgroup rank")->required();
    CLI::App* ex_norm = exists->add_subcommand("normal", "does F_ambient contain a normal F_sub?");
    ex_norm->add_option("--ambient", lhs, "ambient rank")->required();
    ex_norm->add_option("--sub", rhs, "subgroup rank")->required();
    CLI::App* ex_quot = exists->add_subcommand("quotient", "does F_from have quotient F_onto?");
    ex_quot->add_option("--from", lhs, "source rank")->required();
    ex_quot->add_option("--onto", rhs, "quotient rank")->required();

    CLI::App* exp = app.add_subcommand("export", "export a subgroup graph");
    format = "text";
    add_common(exp);
    exp->add_option("generators", gen_texts, "generating words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    bool rank_given = false;
    for (const CLI::Option* opt : rank_options)
        rank_given = rank_given || opt->count() > 0;

    try {
        if (*reduce || *abelianize) {
            fg::Alphabet alphabet = make_alphabet(rank, rank_given, names_file);
            fg::Word w = fg::parse_word(word_text, alphabet);
            if (*reduce) {
                if (format == "json")
                    print_json(fg::word_to_json(w, alphabet));
                else
                    std::cout << fg::format_word(w, alphabet) << "\n";
            } else {
                fg::ExpVector v = fg::abelianize(w);
                if (format == "json") {
                    print_json(json(v));
                } else {
                    for (size_t i = 0; i < v.size(); ++i)
                        std::cout << (i ? " " : "") << v[i];
                    std::cout << "\n";
                }
            }
        } else if (*subgroup || *normal || *conjugate || *exp || *member) {
            fg::Alphabet alphabet = make_alphabet(rank, rank_given, names_file);
            std::vector<fg::Word> gens = parse_words(gen_texts, alphabet);
            fg::Subgroup s = fg::subgroup_from_generators(alphabet.rank(), gens);
            if (*member) {
                fg::Word w = fg::parse_word(word_text, alphabet);
                std::cout << bool_text(fg::membership(s.graph, w)) << "\n";
            } else if (*normal) {
                std::cout << bool_text(fg::is_normal(s)) << "\n";
            } else if (*conjugate) {
                fg::Word w = fg::parse_word(conjugator_text, alphabet);
                report_subgroup(fg::conjugate_subgroup(s, w), alphabet, format);
            } else if (*exp) {
                if (format == "json")
                    print_json(fg::graph_to_json(s.graph));
                else
                    std::cout << fg::to_dot(s.graph, alphabet);
            } else {
                report_subgroup(s, alphabet, format);
            }
        } else if (*enumerate || *classes) {
            fg::Alphabet alphabet = make_alphabet(rank, rank_given, names_file);
            auto subs = fg::enumerate_index(alphabet.rank(), sheets,
                                            enumeration_cap(cap_flag));
            auto parts = fg::conjugacy_classes(subs);
            std::vector<bool> normal_flags;
            int normal_count = 0;
            for (const fg::Subgroup& s : subs) {
                normal_flags.push_back(fg::is_normal(s));
                normal_count += normal_flags.back();
            }
            if (*enumerate) {
                if (format == "json") {
                    json records = json::array();
                    for (const fg::Subgroup& s : subs)
                        records.push_back(fg::subgroup_to_json(s, alphabet));
                    print_json({{"classCount", parts.size()},
                                {"count", subs.size()},
                                {"normalCount", normal_count},
                                {"subgroups", records}});
                } else {
                    std::cout << "subgroups: " << subs.size() << "\n";
                    std::cout << "classes: " << parts.size() << "\n";
                    std::cout << "normal: " << normal_count << "\n";
                    for (size_t i = 0; i < subs.size(); ++i)
                        std::cout << i << ": rank " << subs[i].rank << ", normal "
                                  << bool_text(normal_flags[i]) << ", basis: "
                                  << basis_line(subs[i], alphabet) << "\n";
                }
            } else {
                if (format == "json") {
                    json cls = json::array();
                    for (const auto& members : parts)
                        cls.push_back({{"members", members},
                                       {"normal", normal_flags[members.front()]},
                                       {"size", members.size()}});
                    print_json({{"classes", cls}, {"count", subs.size()}});
                } else {
                    for (size_t c = 0; c < parts.size(); ++c) {
                        std::cout << "class " << c << " (size " << parts[c].size()
                                  << ", normal "
                                  << bool_text(normal_flags[parts[c].front()])
                                  << "): members";
                        for (int i : parts[c])
                            std::cout << " " << i;
                        std::cout << "\n";
                    }
                }
            }
        } else if (*construct) {
            if (*cyclic) {
                fg::Alphabet alphabet = make_alphabet(rank, rank_given, names_file);
                fg::Subgroup s = fg::cyclic_cover(alphabet.rank(), cover_k);
                report_subgroup(s, alphabet, format,
                                "cycle generator: " +
                                    alphabet.name(alphabet.rank() - 1));
            } else if (*embed) {
                report_subgroup(fg::embed_in_F2(embed_m), fg::Alphabet::standard(2),
                                format);
            } else {
                report_subgroup(fg::infinite_index_example(inf_r),
                                fg::Alphabet::standard(2), format);
            }
        } else if (*exists) {
            bool result = false;
            if (*ex_sub)
                result = fg::subgroup_exists(lhs, rhs);
            else if (*ex_norm)
                result = fg::normal_subgroup_exists(rhs, lhs);
            else
                result = fg::quotient_exists(lhs, rhs);
            std::cout << bool_text(result) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
