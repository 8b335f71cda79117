#include "crosscolor/trace.hpp"

namespace crosscolor::trace {

namespace {
bool g_enabled = false;
std::vector<Event> g_events;
}  // namespace

const std::vector<Event>& events() { return g_events; }

bool enabled() { return g_enabled; }

void emit(const std::string& tag, const std::string& detail) {
    if (g_enabled) g_events.push_back({tag, detail});
}

Capture::Capture() : prev_enabled_(g_enabled), prev_events_(std::move(g_events)) {
    g_enabled = true;
    g_events.clear();
}

Capture::~Capture() {
    g_events = std::move(prev_events_);
    g_enabled = prev_enabled_;
}

const std::vector<Event>& Capture::events() const { return g_events; }

bool Capture::saw(const std::string& tag) const {
    for (const auto& e : g_events)
        if (e.tag == tag) return true;
    return false;
}

std::vector<std::string> Capture::tags() const {
    std::vector<std::string> out;
    out.reserve(g_events.size());
    for (const auto& e : g_events) out.push_back(e.tag);
    return out;
}

}  // namespace crosscolor::trace
