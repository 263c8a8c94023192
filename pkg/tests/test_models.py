import itertools

import pytest
from pydantic import ValidationError

from shared.config.constants import FitnessKind
from shared.models.ranking import PairSpec, RankingSpec
from shared.models.run_config import BatchConfig, EvolveConfig, GenerationConfig
from shared.models.ttp_models import TtpInstance
from shared.utils.errors import ConfigurationError


@pytest.mark.parametrize("pi", list(itertools.permutations((1, 2, 3))))
def test_ranking_text_round_trip(pi):
    ranking = RankingSpec(pi=pi)
    assert RankingSpec.parse(ranking.format()) == ranking


def test_ranking_parse():
    assert RankingSpec.parse("C2>S4>S2").pi == (3, 2, 1)
    assert RankingSpec.parse(" c2 > s2 > s4 ").pi == (3, 1, 2)
    assert str(RankingSpec(pi=(1, 2, 3))) == "S2>S4>C2"


@pytest.mark.parametrize("text", ["C2>S4", "C2>S4>S4", "C2>S4>XX"])
def test_ranking_parse_errors(text):
    with pytest.raises(ConfigurationError):
        RankingSpec.parse(text)


def test_ranking_must_be_a_permutation():
    with pytest.raises(ValidationError):
        RankingSpec(pi=(1, 1, 3))


def test_pair_parse():
    pair = PairSpec.parse("C2>S2")
    assert (pair.easy, pair.hard) == (3, 1)
    assert pair.format() == "C2>S2"
    with pytest.raises(ConfigurationError):
        PairSpec.parse("S2>S2")
    with pytest.raises(ValidationError):
        PairSpec(easy=2, hard=2)


def test_evolve_config_targets():
    assert EvolveConfig(fitness_kind="explicit", ranking="C2>S4>S2").target_label == "C2>S4>S2"
    assert EvolveConfig(fitness_kind="pairwise", pair="S4>S2").target_label == "S4>S2"
    assert EvolveConfig().target_label == "none"
    with pytest.raises(ValidationError):
        EvolveConfig(fitness_kind="explicit")
    with pytest.raises(ValidationError):
        EvolveConfig(fitness_kind="pairwise", ranking="C2>S4>S2")
    with pytest.raises(ValidationError):
        EvolveConfig(k=0)


def test_generation_config_validation():
    with pytest.raises(ValidationError):
        GenerationConfig(ipn=2)
    with pytest.raises(ValidationError):
        GenerationConfig(n=2)
    with pytest.raises(ValidationError):
        GenerationConfig(v_min=1.0, v_max=0.5)
    assert GenerationConfig(n=10, ipn=5).n_items == 45


def test_yaml_round_trip(tmp_path):
    config = EvolveConfig(
        fitness_kind="explicit",
        ranking="S4>C2>S2",
        generation=GenerationConfig(n=40, ipn=3, integer_items=True),
        aggregation_quantile=0.25,
        wall_time_limit=60.0,
    )
    path = tmp_path / "configs" / "evolve.yaml"
    config.save(path)
    assert EvolveConfig.load(path) == config

    batch = BatchConfig(n_values=[50, 100], fitness_kinds=[FitnessKind.PAIRWISE], template=config)
    batch.save(tmp_path / "batch.yaml")
    assert BatchConfig.load(tmp_path / "batch.yaml") == batch


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        EvolveConfig.load(tmp_path / "absent.yaml")


def test_instance_invariants(triangle_instance):
    data = triangle_instance.model_dump()
    with pytest.raises(ValidationError):
        TtpInstance.model_validate({**data, "availability": [0]})
    with pytest.raises(ValidationError):
        TtpInstance.model_validate({**data, "capacity": 0.0})
    with pytest.raises(ValidationError):
        TtpInstance.model_validate({**data, "weights": [0.0]})
    assert triangle_instance.items == [(100.0, 2.0, 1)]


def test_model_accepts_capacity_above_total_weight(triangle_instance):
    assert triangle_instance.capacity > sum(triangle_instance.weights)
    assert TtpInstance.model_validate(triangle_instance.model_dump()) == triangle_instance
