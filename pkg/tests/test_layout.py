import pytest
from oracles import (
    accounting_violations,
    containment_violations,
    overlapping_pairs,
    proportionality_violations,
    random_layout_dataset,
    smoothstep_boundary,
)

from wordstream.errors import AllWeightsZeroError, ConfigError
from wordstream.layout import (
    LayoutConfig,
    box_centers,
    compute_layers,
    font_size,
    place_words,
)
from wordstream.metrics import BoxSelection


def simple_config(**kwargs):
    defaults = dict(min_font=10, max_font=30, top_k=5, width=400, height=100)
    defaults.update(kwargs)
    return LayoutConfig(**defaults)


class TestConfig:
    def test_valid(self):
        simple_config().validate()

    def test_min_over_max_rejected(self):
        with pytest.raises(ConfigError, match="minFont <= maxFont"):
            simple_config(min_font=50, max_font=10).validate()

    def test_small_viewport_rejected(self):
        with pytest.raises(ConfigError):
            simple_config(width=50).validate()
        with pytest.raises(ConfigError):
            simple_config(height=50).validate()

    def test_top_k_positive(self):
        with pytest.raises(ConfigError):
            simple_config(top_k=0).validate()


class TestComputeLayers:
    def test_constant_band_thickness_90_percent(self):
        layers = compute_layers({"Noun": [2.0, 2.0]}, simple_config(height=100))
        layer = layers[0]
        for top, bottom in zip(layer.top, layer.bottom):
            assert bottom - top == pytest.approx(90.0)
            assert top == pytest.approx(5.0)
            assert bottom == pytest.approx(95.0)

    def test_two_equal_categories_split_evenly(self):
        weights = {"Noun": [3.0, 3.0], "Verb": [3.0, 3.0]}
        layers = compute_layers(weights, simple_config(height=100))
        for layer in layers:
            for top, bottom in zip(layer.top, layer.bottom):
                assert bottom - top == pytest.approx(45.0)

    def test_doubling_weight_doubles_thickness(self):
        layers = compute_layers({"Noun": [5.0, 10.0]}, simple_config())
        layer = layers[0]
        c0, c1 = layer.centers
        t0 = layer.bottom_at(c0) - layer.top_at(c0)
        t1 = layer.bottom_at(c1) - layer.top_at(c1)
        assert t1 / t0 == pytest.approx(2.0, rel=1e-6)

    def test_stack_order_fixed(self):
        weights = {"Noun": [1.0], "Verb": [1.0], "Adjective": [1.0]}
        layers = compute_layers(weights, simple_config())
        assert [l.category for l in layers] == ["Noun", "Verb", "Adjective"]
        assert layers[0].top_knots[0] < layers[1].top_knots[0] < layers[2].top_knots[0]

    def test_all_zero_weights_rejected(self):
        with pytest.raises(AllWeightsZeroError):
            compute_layers({"Noun": [0.0, 0.0]}, simple_config())

    def test_bottom_never_above_top(self):
        for seed in range(30):
            weights, _sel, config = random_layout_dataset(seed)
            layers = compute_layers(weights, config)
            for layer in layers:
                for top, bottom in zip(layer.top, layer.bottom):
                    assert bottom >= top - 1e-9

    def test_boundary_samples_match_reference(self):
        weights = {"Noun": [1.0, 4.0, 2.0], "Verb": [2.0, 0.0, 5.0]}
        config = simple_config(width=600, height=300)
        layers = compute_layers(weights, config)
        for layer in layers:
            xs = __import__("wordstream.layout", fromlist=["sample_xs"]).sample_xs(
                layer.centers, config.width
            )
            for x, top, bottom in zip(xs, layer.top, layer.bottom):
                assert top == pytest.approx(
                    smoothstep_boundary(layer.centers, layer.top_knots, x), abs=1e-9
                )
                assert bottom == pytest.approx(
                    smoothstep_boundary(layer.centers, layer.bottom_knots, x), abs=1e-9
                )

    def test_no_overshoot_between_centers(self):
        for seed in range(25):
            weights, _sel, config = random_layout_dataset(seed + 1000)
            layers = compute_layers(weights, config)
            for layer in layers:
                centers = layer.centers
                for knots, at in (
                    (layer.top_knots, layer.top_at),
                    (layer.bottom_knots, layer.bottom_at),
                ):
                    for i in range(len(centers) - 1):
                        lo = min(knots[i], knots[i + 1]) - 1e-9
                        hi = max(knots[i], knots[i + 1]) + 1e-9
                        for j in range(1, 16):
                            x = centers[i] + (centers[i + 1] - centers[i]) * j / 16
                            assert lo <= at(x) <= hi

    def test_at_least_4_samples_per_interval(self):
        weights = {"Noun": [1.0, 2.0, 3.0]}
        config = simple_config(width=600)
        layers = compute_layers(weights, config)
        layer = layers[0]
        from wordstream.layout import sample_xs

        xs = sample_xs(layer.centers, config.width)
        for i in range(len(layer.centers) - 1):
            inside = [
                x for x in xs if layer.centers[i] <= x < layer.centers[i + 1]
            ]
            assert len(inside) >= 4

    def test_single_box_constant_band(self):
        layers = compute_layers({"Noun": [4.0]}, simple_config(height=200))
        layer = layers[0]
        assert layer.top == pytest.approx([layer.top[0]] * len(layer.top))
        assert layer.bottom[0] - layer.top[0] == pytest.approx(180.0)


class TestFontSize:
    def test_endpoints(self):
        config = simple_config(min_font=10, max_font=30)
        assert font_size(1, 1, 9, config) == 10
        assert font_size(9, 1, 9, config) == 30

    def test_midpoint(self):
        config = simple_config(min_font=10, max_font=30)
        assert font_size(5, 1, 9, config) == pytest.approx(20.0)

    def test_degenerate_range(self):
        config = simple_config(min_font=10, max_font=30)
        assert font_size(7, 7, 7, config) == 20.0


class TestPlaceWords:
    def test_single_word_centered_in_huge_cell(self):
        config = simple_config(width=800, height=600, min_font=10, max_font=20)
        layers = compute_layers({"Noun": [10.0]}, config)
        selections = [BoxSelection(0, "Noun", [("study", 4.0)])]
        result = place_words(layers, selections, config)
        assert len(result.words) == 1
        word = result.words[0]
        assert word.x + word.w / 2 == pytest.approx(400.0)
        band_mid = (layers[0].top_at(400) + layers[0].bottom_at(400)) / 2
        assert word.y + word.h / 2 == pytest.approx(band_mid)
        assert word.font_size == 15.0  # degenerate range -> midpoint

    def test_zero_thickness_cell_drops_all(self):
        config = simple_config(width=400, height=200)
        layers = compute_layers({"Noun": [8.0, 0.0]}, config)
        selections = [
            BoxSelection(0, "Noun", [("data", 3.0)]),
            BoxSelection(1, "Noun", [("ghost", 1.0)]),
        ]
        result = place_words(layers, selections, config)
        assert [w.term for w in result.words] == ["data"]
        assert [(d.term, d.reason) for d in result.dropped] == [("ghost", "no-fit")]

    def test_font_shrinks_before_dropping(self):
        config = simple_config(width=200, height=120, min_font=6, max_font=40)
        layers = compute_layers({"Noun": [1.0, 1.0]}, config)
        selections = [
            BoxSelection(0, "Noun", [("responsibility", 10.0), ("tiny", 1.0)]),
        ]
        result = place_words(layers, selections, config)
        placed = {w.term: w for w in result.words}
        if "responsibility" in placed:
            assert placed["responsibility"].font_size < 40

    def test_words_never_exceed_viewport(self):
        for seed in (3, 7, 11):
            weights, selections, config = random_layout_dataset(seed)
            layers = compute_layers(weights, config)
            result = place_words(layers, selections, config)
            for word in result.words:
                assert word.x >= -1e-6
                assert word.y >= -1e-6
                assert word.x + word.w <= config.width + 1e-6
                assert word.y + word.h <= config.height + 1e-6

    def test_font_bounds_respected(self):
        for seed in (2, 9):
            weights, selections, config = random_layout_dataset(seed)
            layers = compute_layers(weights, config)
            result = place_words(layers, selections, config)
            for word in result.words:
                assert config.min_font <= word.font_size <= config.max_font + 1e-9


class TestInvariantSuite:
    """Randomized layout datasets checked against brute-force oracles."""

    @pytest.mark.parametrize("seed", range(0, 40))
    def test_invariants(self, seed):
        weights, selections, config = random_layout_dataset(seed)
        layers = compute_layers(weights, config)
        result = place_words(layers, selections, config)
        assert overlapping_pairs(result) == []
        assert containment_violations(result) == []
        assert proportionality_violations(result, weights) == []
        assert accounting_violations(result, selections) == []


class TestDeterminism:
    def test_identical_runs_identical_layouts(self):
        from wordstream.render import emit_json

        weights, selections, config = random_layout_dataset(42)
        a = place_words(compute_layers(weights, config), selections, config)
        b = place_words(compute_layers(weights, config), selections, config)
        assert emit_json(a) == emit_json(b)


def test_box_centers_spacing():
    centers = box_centers(4, 400)
    assert centers == [50.0, 150.0, 250.0, 350.0]
