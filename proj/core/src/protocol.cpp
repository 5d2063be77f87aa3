#include "dilworth/protocol.hpp"

#include <algorithm>

#include "dilworth/errors.hpp"

namespace dilworth {

std::string to_string(ProtocolVariant v) { return v == ProtocolVariant::confirm ? "confirm" : "decode"; }

ProtocolVariant parse_variant(const std::string& name) {
    if (name == "confirm") return ProtocolVariant::confirm;
    if (name == "decode") return ProtocolVariant::decode;
    throw InvalidInput("unknown protocol variant '" + name + "' (expected confirm or decode)");
}

namespace {

std::vector<std::vector<int>> closed_rows(const Digraph& g, bool outgoing) {
    std::vector<std::vector<int>> rows;
    for (int v = 0; v < g.n(); ++v) {
        VertexSet r = outgoing ? g.out(v) : g.in(v);
        r.set(v);
        rows.push_back(r.members());
    }
    return rows;
}

// Calls f on every sequence whose i-th letter is drawn from choices[seq_i],
// in lexicographic order.
template <typename F>
void for_each_product(const std::vector<std::vector<int>>& rows, const Sequence& x, F&& f) {
    const std::size_t t = x.size();
    std::vector<std::size_t> pos(t, 0);
    Sequence y(t);
    for (std::size_t i = 0; i < t; ++i) {
        y[i] = rows[static_cast<std::size_t>(x[i])][0];
    }
    while (true) {
        f(y);
        std::size_t i = t;
        while (i > 0) {
            --i;
            const auto& choices = rows[static_cast<std::size_t>(x[i])];
            if (++pos[i] < choices.size()) {
                y[i] = choices[pos[i]];
                break;
            }
            pos[i] = 0;
            y[i] = choices[0];
            if (i == 0) {
                return;
            }
        }
        if (t == 0) {
            return;
        }
    }
}

void check_letters(const Digraph& g, const Sequence& x) {
    for (int a : x) {
        if (a < 0 || a >= g.n()) {
            throw InvalidInput("letter " + std::to_string(a) + " outside alphabet 0.." + std::to_string(g.n() - 1));
        }
    }
}

void check_coloring_shape(const PowerIndex& index, const Coloring& c) {
    if (c.colors.size() != index.size()) {
        throw MalformedCertificate("coloring has " + std::to_string(c.colors.size()) + " entries, power has " +
                                   std::to_string(index.size()) + " vertices");
    }
}

PowerIndex checked_index(const Digraph& g, int t, std::uint64_t limit) {
    if (t < 0) {
        throw InvalidInput("block length must be nonnegative");
    }
    PowerIndex index(g.n(), t);
    if (index.size() > limit) {
        throw LimitExceeded("exhaustive protocol sweep", index.size(), limit);
    }
    return index;
}

std::string seq_str(const Sequence& s) {
    std::string out;
    for (int a : s) {
        out += std::to_string(a);
        out += ' ';
    }
    if (!out.empty()) {
        out.pop_back();
    }
    return "(" + out + ")";
}

}  // namespace

std::vector<Sequence> channel_outputs(const ChannelModel& ch, const Sequence& x) {
    check_letters(ch.graph, x);
    std::vector<Sequence> out;
    for_each_product(closed_rows(ch.graph, true), x, [&](const Sequence& y) { out.push_back(y); });
    return out;
}

Sequence sample_output(const ChannelModel& ch, const Sequence& x, std::mt19937_64& rng) {
    check_letters(ch.graph, x);
    Sequence y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        VertexSet r = ch.graph.out(x[i]);
        r.set(x[i]);
        const auto choices = r.members();
        y[i] = choices[static_cast<std::size_t>(rng() % choices.size())];
    }
    return y;
}

std::optional<std::pair<Sequence, Sequence>> power_coloring_conflict(const Digraph& g, int t,
                                                                     const Coloring& coloring) {
    const PowerIndex index(g.n(), t);
    check_coloring_shape(index, coloring);
    const auto rows = closed_rows(g, true);
    Sequence x;
    for (std::uint64_t xi = 0; xi < index.size(); ++xi) {
        index.decode_into(xi, x);
        const int cx = coloring.colors[xi];
        std::optional<Sequence> hit;
        for_each_product(rows, x, [&](const Sequence& y) {
            if (!hit && y != x && coloring.colors[index.encode(y)] == cx) {
                hit = y;
            }
        });
        if (hit) {
            return std::make_pair(x, *hit);
        }
    }
    return std::nullopt;
}

Digraph protocol_graph(const ChannelModel& ch, ProtocolVariant variant) {
    return variant == ProtocolVariant::confirm ? ch.graph : closure_graph(ch.graph);
}

ProtocolVerdict confirm_protocol_check(const ChannelModel& ch, int t, const Coloring& coloring, ColoringCheck mode,
                                       std::uint64_t limit) {
    const PowerIndex index = checked_index(ch.graph, t, limit);
    check_coloring_shape(index, coloring);
    ProtocolVerdict verdict;
    if (auto conflict = power_coloring_conflict(ch.graph, t, coloring)) {
        verdict.coloring_proper = false;
        if (mode == ColoringCheck::strict) {
            throw UnverifiedCertificate("coloring is not proper on the channel power: " + seq_str(conflict->first) +
                                        " and " + seq_str(conflict->second) + " share a color");
        }
    }
    const auto rows = closed_rows(ch.graph, true);
    Sequence x;
    for (std::uint64_t xi = 0; xi < index.size() && verdict.pass; ++xi) {
        index.decode_into(xi, x);
        for_each_product(rows, x, [&](const Sequence& y) {
            if (!verdict.pass) {
                return;
            }
            ++verdict.pairs_checked;
            const bool confirmed = coloring.colors[index.encode(y)] == coloring.colors[xi];
            if (confirmed != (y == x)) {
                verdict.pass = false;
                verdict.counterexample = Counterexample{
                    x, y, {}, confirmed ? "false confirmation: received differs from sent but colors agree"
                                        : "missed confirmation: received equals sent but colors differ"};
            }
        });
    }
    return verdict;
}

ProtocolVerdict decode_protocol_check(const ChannelModel& ch, int t, const Coloring& coloring, ColoringCheck mode,
                                      std::uint64_t limit) {
    const PowerIndex index = checked_index(ch.graph, t, limit);
    check_coloring_shape(index, coloring);
    ProtocolVerdict verdict;
    if (auto conflict = power_coloring_conflict(closure_graph(ch.graph), t, coloring)) {
        verdict.coloring_proper = false;
        if (mode == ColoringCheck::strict) {
            throw UnverifiedCertificate("coloring is not proper on the closure power: " + seq_str(conflict->first) +
                                        " and " + seq_str(conflict->second) + " share a color");
        }
    }
    const auto out_rows = closed_rows(ch.graph, true);
    const auto in_rows = closed_rows(ch.graph, false);
    Sequence x;
    for (std::uint64_t xi = 0; xi < index.size() && verdict.pass; ++xi) {
        index.decode_into(xi, x);
        for_each_product(out_rows, x, [&](const Sequence& y) {
            if (!verdict.pass) {
                return;
            }
            ++verdict.pairs_checked;
            std::vector<Sequence> candidates;
            for_each_product(in_rows, y, [&](const Sequence& z) {
                if (coloring.colors[index.encode(z)] == coloring.colors[xi]) {
                    candidates.push_back(z);
                }
            });
            if (candidates.size() != 1 || candidates[0] != x) {
                verdict.pass = false;
                verdict.counterexample =
                    Counterexample{x, y, candidates, "decoding ambiguous: several inputs fit the output and color"};
            }
        });
    }
    return verdict;
}

std::vector<ChannelTranscript> simulate_transcripts(const ChannelModel& ch, int t, const Coloring& coloring,
                                                    ProtocolVariant variant, std::uint64_t seed, int samples) {
    const PowerIndex index(ch.graph.n(), t);
    check_coloring_shape(index, coloring);
    std::mt19937_64 rng(seed);
    const auto in_rows = closed_rows(ch.graph, false);
    std::vector<ChannelTranscript> out;
    for (int s = 0; s < samples; ++s) {
        ChannelTranscript tr;
        tr.sent = index.decode(rng() % index.size());
        tr.received = sample_output(ch, tr.sent, rng);
        tr.noiseless_msg = coloring.colors[index.encode(tr.sent)];
        if (variant == ProtocolVariant::confirm) {
            tr.confirmed = coloring.colors[index.encode(tr.received)] == tr.noiseless_msg;
        } else {
            for_each_product(in_rows, tr.received, [&](const Sequence& z) {
                if (coloring.colors[index.encode(z)] == tr.noiseless_msg) {
                    tr.decoded.push_back(z);
                }
            });
        }
        out.push_back(std::move(tr));
    }
    return out;
}

int bits_for(int k) {
    int b = 0;
    while ((1L << b) < k) {
        ++b;
    }
    return b;
}

std::vector<MessageLengthRow> message_length_table(const ChannelModel& ch, int t_max, ProtocolVariant variant,
                                                   double cell_seconds) {
    const Digraph base = protocol_graph(ch, variant);
    std::vector<MessageLengthRow> rows;
    for (int t = 1; t <= t_max; ++t) {
        MessageLengthRow row;
        row.t = t;
        row.chi = chromatic_number(and_power(base, t), Budget(cell_seconds));
        row.bits = bits_for(row.chi.upper);
        row.rate = static_cast<double>(row.bits) / t;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dilworth
