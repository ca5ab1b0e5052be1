#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctl
{
    /// Thrown when an exact search runs past its time budget. Never a wrong answer, only no answer.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        explicit BudgetExceeded(const std::string & stage) :
            std::runtime_error("time budget exceeded in " + stage),
            _stage(stage)
        {
        }

        auto stage() const -> const std::string & { return _stage; }

    private:
        std::string _stage;
    };

    /// Wall-clock deadline shared by the exact searches. Default-constructed deadlines allow 60 s.
    class Deadline
    {
    public:
        using Clock = std::chrono::steady_clock;

        Deadline() : Deadline(std::chrono::seconds(60)) {}
        explicit Deadline(std::chrono::milliseconds budget) : _end(Clock::now() + budget) {}

        static auto unlimited() -> Deadline
        {
            Deadline d;
            d._end = Clock::time_point::max();
            return d;
        }

        auto expired() const -> bool { return _end != Clock::time_point::max() && Clock::now() >= _end; }

        /// Cheap periodic check: consults the clock once every 4096 calls.
        auto tick(const char * stage) const -> void
        {
            if ((++_ticks & 0xfff) == 0 && expired())
                throw BudgetExceeded(stage);
        }

        auto check(const char * stage) const -> void
        {
            if (expired())
                throw BudgetExceeded(stage);
        }

    private:
        Clock::time_point _end;
        mutable std::uint64_t _ticks = 0;
    };
}
