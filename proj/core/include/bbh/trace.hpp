#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bbh/ring.hpp"

namespace bbh {

enum class EventKind : std::uint8_t {
    BH_ACTIVE,
    DESTROYED,
    DETECT_CLAIM,
    WB_WRITE,
    WB_ERASE,
    PEBBLE_PICK,
    MOVE,
    PEBBLE_DROP,
    STATE_CHANGE,
};

const char* to_string(EventKind k);
std::optional<EventKind> parse_event_kind(const std::string& s);

struct TraceEvent {
    int round = 0;
    EventKind kind = EventKind::MOVE;
    int agent = -1;  // -1 prints as '-'
    int node = -1;
    std::vector<std::pair<std::string, std::string>> kv;

    const std::string* get(const std::string& key) const;
    bool operator==(const TraceEvent&) const = default;
};

struct TraceHeader {
    int n = 0;
    int bh = 0;
    ProtocolKind protocol = ProtocolKind::F2FColoc;
    std::vector<int> placement;  // start node of agent i+1
    std::string adversary = "never";
    std::uint64_t seed = 0;
    int rounds = 0;
    bool kill_residents = true;

    RingConfig config() const;
    bool operator==(const TraceHeader&) const = default;
};

struct TraceFault {
    int round = 0;
    std::string reason;
    bool operator==(const TraceFault&) const = default;
};

struct Trace {
    TraceHeader header;
    std::vector<TraceEvent> events;
    std::optional<TraceFault> fault;  // the run stopped on a protocol integrity fault
};

struct TraceParseError : std::runtime_error {
    int line;
    TraceParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

std::string format_event(const TraceEvent& e);
void write_trace(std::ostream& out, const Trace& t);
Trace read_trace(std::istream& in);

}  // namespace bbh
