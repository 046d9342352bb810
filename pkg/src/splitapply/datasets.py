"""The ride-rating example: ten trips, five distinct raters."""

USERIDS = (381, 1291, 3992, 193942, 9493, 381, 3992, 381, 3992, 193942)
RATINGS = (5.0, 4.0, 4.0, 4.0, 5.0, 5.0, 5.0, 3.0, 5.0, 4.0)

# The same trips as printed in the Julia listings, where rater 9493 appears as 9494.
USERIDS_9494 = tuple(9494 if u == 9493 else u for u in USERIDS)
