#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "series_engine.hpp"

namespace besselhr::detail {

SeriesOut run_series_mp400(const SeriesJob& job)
{
    using R = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;
    using C = boost::multiprecision::cpp_complex<400>;
    Engine<R, C> eng{400, boost::multiprecision::pow(R(10), -400)};
    return eng.run(job);
}

}  // namespace besselhr::detail
