#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dilworth/budget.hpp"
#include "dilworth/certificates.hpp"
#include "dilworth/digraph.hpp"
#include "dilworth/exact_params.hpp"
#include "dilworth/products.hpp"

namespace dilworth {

/// Confusion digraph of a channel: edge (a,b) means input a may come out as
/// b. Every letter may also come out unchanged; that is implicit.
struct ChannelModel {
    Digraph graph;
};

enum class ProtocolVariant { confirm, decode };

std::string to_string(ProtocolVariant v);
ProtocolVariant parse_variant(const std::string& name);

/// Whether improper colorings are rejected up front or run anyway so the
/// adversary can exhibit the failure.
enum class ColoringCheck { strict, allow_improper };

/// Every sequence the channel can emit on input x, lexicographic.
std::vector<Sequence> channel_outputs(const ChannelModel& ch, const Sequence& x);

/// One output drawn coordinatewise from the closed out-neighbourhoods.
Sequence sample_output(const ChannelModel& ch, const Sequence& x, std::mt19937_64& rng);

struct ChannelTranscript {
    Sequence sent;
    Sequence received;
    int noiseless_msg = 0;
    /// confirm variant: whether Bob accepts his reading.
    bool confirmed = false;
    /// decode variant: every input consistent with the output and message.
    std::vector<Sequence> decoded;
};

struct Counterexample {
    Sequence sent;
    Sequence received;
    std::vector<Sequence> candidates;
    std::string reason;
};

struct ProtocolVerdict {
    bool pass = true;
    /// The coloring was proper on the relevant power graph.
    bool coloring_proper = true;
    std::optional<Counterexample> counterexample;
    std::uint64_t pairs_checked = 0;
};

/// Confirmation protocol: Bob accepts iff color(received) = color(sent).
/// Passes iff he accepts exactly when received = sent, over every input and
/// every channel behaviour.
ProtocolVerdict confirm_protocol_check(const ChannelModel& ch, int t, const Coloring& coloring,
                                       ColoringCheck mode = ColoringCheck::strict,
                                       std::uint64_t limit = kDefaultVertexLimit);

/// Complete decoding: Bob lists every input that could yield the output and
/// carries the sent color. Passes iff that list is always just the input.
/// The coloring lives on the power of the closure graph.
ProtocolVerdict decode_protocol_check(const ChannelModel& ch, int t, const Coloring& coloring,
                                      ColoringCheck mode = ColoringCheck::strict,
                                      std::uint64_t limit = kDefaultVertexLimit);

/// First pair (x, y) of the power of `g` joined by an edge and sharing a
/// color, scanning x lexicographically. Does not materialize the power.
std::optional<std::pair<Sequence, Sequence>> power_coloring_conflict(const Digraph& g, int t,
                                                                     const Coloring& coloring);

/// Demo transcripts with channel noise drawn from a seeded generator.
std::vector<ChannelTranscript> simulate_transcripts(const ChannelModel& ch, int t, const Coloring& coloring,
                                                    ProtocolVariant variant, std::uint64_t seed, int samples);

struct MessageLengthRow {
    int t = 0;
    ColoringResult chi;
    int bits = 0;
    double rate = 0;
};

/// ceil(log2 chi) bits per block for t = 1..t_max, on the channel power
/// (confirm) or the closure power (decode).
std::vector<MessageLengthRow> message_length_table(const ChannelModel& ch, int t_max, ProtocolVariant variant,
                                                   double cell_seconds = 60);

/// Smallest b with 2^b >= k (0 for k <= 1).
int bits_for(int k);

/// The channel graph whose power carries the protocol coloring.
Digraph protocol_graph(const ChannelModel& ch, ProtocolVariant variant);

}  // namespace dilworth
