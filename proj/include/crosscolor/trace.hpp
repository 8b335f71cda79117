// Case-trace facility.
//
// The structured coloring routines emit a tag every time they commit to a
// case branch ("L7-2.3", "C19-unique-z", ...).  Tests use the captured tag
// stream to prove branch coverage; the CLI can print it with --trace.
// Single-threaded by design, like the rest of the library.

#pragma once

#include <string>
#include <vector>

namespace crosscolor::trace {

struct Event {
    std::string tag;
    std::string detail;  // optional human-oriented context, e.g. "v=3 alpha=2"
};

// Returns the live event stream (appended to only while capture is active).
const std::vector<Event>& events();

bool enabled();
void emit(const std::string& tag, const std::string& detail = "");

// RAII capture scope: clears the stream, enables collection, restores the
// previous state on destruction.  Nested scopes stack.
class Capture {
public:
    Capture();
    ~Capture();
    Capture(const Capture&) = delete;
    Capture& operator=(const Capture&) = delete;

    const std::vector<Event>& events() const;
    bool saw(const std::string& tag) const;
    std::vector<std::string> tags() const;

private:
    bool prev_enabled_;
    std::vector<Event> prev_events_;
};

}  // namespace crosscolor::trace
