// Built against an installed copy of the library.
#include <opsome/partitions.hpp>

int main()
{
    return opsome::some_bar_series(4) == opsome::some_bar_series_closed(4) ? 0 : 1;
}
