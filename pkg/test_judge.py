"""
Judge prompt rendering, verdict parsing, the mock judge and batch dispatch
"""
import asyncio
import json

import httpx
import pytest

from errors import ConfigError, JudgeBackendError, UnsupportedDimension
from judge_service import (
    UNPARSEABLE,
    JudgeBackendConfig,
    judge_pairs,
    mock_judge,
    parse_verdict,
    render_prompt,
)
from llm_service import HTTPJudgeBackend, JudgeBackend, MockJudgeBackend, create_judge_backend
from metrics_service import FaithDimension, extract_pairs
from trajectory_service import parse

TWO_HOP = (
    "<think>Who painted the Mona Lisa?</think>\n<search>Mona Lisa painter</search>\n"
    "<information>The Mona Lisa was painted by Leonardo da Vinci.</information>\n"
    "<think>Leonardo painted it. Where was Leonardo born?</think>\n<search>Leonardo birthplace</search>\n"
    "<information>He was born in Vinci, near Florence.</information>\n"
    "<think>Leonardo came from a Tuscan town.</think>\n<answer>Vinci</answer>"
)

FAST = JudgeBackendConfig(retry_backoff=0.0, parallelism=2)


def _pairs(source=TWO_HOP, trajectory_id="nq-006"):
    trajectory = parse(source, id=trajectory_id)
    return extract_pairs(trajectory, FaithDimension.THINK_SEARCH) + extract_pairs(trajectory, FaithDimension.INFO_THINK)


class ScriptedBackend(JudgeBackend):
    """Replays per-call outcomes: a string is returned, an exception raised"""

    backend_id = "scripted"

    def __init__(self, outcomes=None, default="1", delays=None):
        self.outcomes = list(outcomes or [])
        self.default = default
        self.delays = delays or {}
        self.calls = 0
        self.in_flight = 0
        self.peak = 0

    async def complete(self, prompt):
        self.calls += 1
        self.in_flight += 1
        self.peak = max(self.peak, self.in_flight)
        try:
            await asyncio.sleep(self.delays.get(prompt.pair_ref.key, 0))
            outcome = self.outcomes.pop(0) if self.outcomes else self.default
            if isinstance(outcome, Exception):
                raise outcome
            return outcome
        finally:
            self.in_flight -= 1


class TestRenderPrompt:
    def test_think_search_matches_fixture(self, fixtures_dir):
        trajectory = parse(
            "<think>I need to find where the Eiffel Tower is located.</think>\n"
            "<search>Eiffel Tower location</search>",
            id="hotpotqa-001",
        )
        prompt = render_prompt(extract_pairs(trajectory, FaithDimension.THINK_SEARCH)[0])
        expected = (fixtures_dir / "prompts" / "think_search_rendered.txt").read_text(encoding="utf-8")
        assert prompt.text == expected
        assert "Output 1 if the search query" in prompt.text

    def test_info_think_matches_fixture(self, fixtures_dir):
        trajectory = parse(
            "<information>The Eiffel Tower is a landmark in Paris, France.</information>\n"
            "<think>The Eiffel Tower stands in Paris.</think>",
            id="hotpotqa-001",
        )
        prompt = render_prompt(extract_pairs(trajectory, FaithDimension.INFO_THINK)[0])
        expected = (fixtures_dir / "prompts" / "info_think_rendered.txt").read_text(encoding="utf-8")
        assert prompt.text == expected
        assert prompt.text.endswith("Please only output the score number.")

    def test_info_think_substitution(self):
        trajectory = parse("<information>X</information><think>Y</think>", id="t")
        prompt = render_prompt(extract_pairs(trajectory, FaithDimension.INFO_THINK)[0])
        assert prompt.input_string == "<information>X</information>\n<think>Y</think>"
        assert "<information>X</information>\n<think>Y</think>." in prompt.text
        assert prompt.pair_ref.key == ("t", "info_think", 0)

    def test_think_answer_unsupported(self):
        trajectory = parse("<think>a</think><answer>b</answer>")
        with pytest.raises(UnsupportedDimension):
            render_prompt(extract_pairs(trajectory, FaithDimension.THINK_ANSWER)[0])

    def test_injective_on_content(self):
        first = parse("<information>ab</information><think>c</think>")
        second = parse("<information>a</information><think>bc</think>")
        texts = {
            render_prompt(extract_pairs(t, FaithDimension.INFO_THINK)[0]).text for t in (first, second)
        }
        assert len(texts) == 2


class TestParseVerdict:
    @pytest.mark.parametrize(
        "raw,label",
        [
            ("1", 1),
            ("0", 0),
            ("  Score: 1\n", 1),
            ("\n0\n", 0),
            ("The answer is 0 because the query drifts.", 0),
            ("faithful", UNPARSEABLE),
            ("", UNPARSEABLE),
            ("10", UNPARSEABLE),
            ("0.5", UNPARSEABLE),
            ("score=1", 1),
            ("-1", UNPARSEABLE),
            ("label: -1", UNPARSEABLE),
            ("-1 or maybe 0", 0),
        ],
    )
    def test_labels(self, raw, label):
        assert parse_verdict(raw) == label

    def test_whitespace_idempotent(self):
        for raw in ("1", "0", "Score: 1", "nope"):
            assert parse_verdict(f"  \t{raw}\n ") == parse_verdict(raw)


class TestMockJudge:
    def _prompt(self, premise, conclusion):
        trajectory = parse(f"<think>{premise}</think><search>{conclusion}</search>", id="m")
        return render_prompt(extract_pairs(trajectory, FaithDimension.THINK_SEARCH)[0])

    def test_shared_word(self):
        assert mock_judge(self._prompt("capital France Paris", "Paris located")) == "1"

    def test_disjoint(self):
        assert mock_judge(self._prompt("alpha beta", "gamma delta")) == "0"

    def test_self_overlap(self):
        assert mock_judge(self._prompt("Kilimanjaro", "Kilimanjaro")) == "1"

    def test_short_and_stop_words_ignored(self):
        assert mock_judge(self._prompt("the cat sat", "the cat ran")) == "0"
        assert mock_judge(self._prompt("first there", "first there")) == "0"

    def test_deterministic(self):
        prompt = self._prompt("Leonardo painted", "Leonardo birthplace")
        assert {mock_judge(prompt) for _ in range(5)} == {"1"}


class TestJudgePairs:
    @pytest.mark.asyncio
    async def test_mock_in_order(self):
        pairs = _pairs()
        verdicts = await judge_pairs(pairs, MockJudgeBackend(FAST))
        assert [v.pair_ref.key for v in verdicts] == [p.key for p in pairs]
        assert [v.label for v in verdicts] == [1, 1, 1, 0]
        assert all(v.backend == "mock" for v in verdicts)
        again = await judge_pairs(pairs, MockJudgeBackend(FAST))
        assert again == verdicts

    @pytest.mark.asyncio
    async def test_empty(self):
        assert await judge_pairs([], MockJudgeBackend(FAST)) == []

    @pytest.mark.asyncio
    async def test_passthrough_raw(self):
        verdicts = await judge_pairs(_pairs()[:1], ScriptedBackend(default="0"), FAST)
        assert verdicts[0].label == 0
        assert verdicts[0].raw == "0"

    @pytest.mark.asyncio
    async def test_retries_transient_failures(self):
        backend = ScriptedBackend(outcomes=[JudgeBackendError("boom"), JudgeBackendError("boom"), "1"])
        verdicts = await judge_pairs(_pairs()[:1], backend, JudgeBackendConfig(max_attempts=3, retry_backoff=0.0))
        assert verdicts[0].label == 1
        assert backend.calls == 3

    @pytest.mark.asyncio
    async def test_exhausted_retries_unparseable(self):
        backend = ScriptedBackend(outcomes=[JudgeBackendError("down")] * 3)
        pairs = _pairs()[:2]
        verdicts = await judge_pairs(pairs, backend, JudgeBackendConfig(max_attempts=2, retry_backoff=0.0, parallelism=1))
        assert len(verdicts) == 2
        assert verdicts[0].label == UNPARSEABLE
        assert verdicts[0].raw.startswith("judge failed after 2 attempts")
        assert "down" in verdicts[0].raw
        assert verdicts[1].label == 1

    @pytest.mark.asyncio
    async def test_order_survives_completion_order(self):
        pairs = _pairs()
        delays = {pairs[0].key: 0.05, pairs[1].key: 0.0, pairs[2].key: 0.02, pairs[3].key: 0.0}
        backend = ScriptedBackend(delays=delays)
        verdicts = await judge_pairs(pairs, backend, JudgeBackendConfig(parallelism=4, retry_backoff=0.0))
        assert [v.pair_ref.key for v in verdicts] == [p.key for p in pairs]

    @pytest.mark.asyncio
    async def test_parallelism_bound(self):
        pairs = _pairs()
        backend = ScriptedBackend(delays={p.key: 0.01 for p in pairs})
        await judge_pairs(pairs, backend, JudgeBackendConfig(parallelism=2, retry_backoff=0.0))
        assert backend.peak <= 2

    @pytest.mark.asyncio
    async def test_think_answer_rejected(self):
        trajectory = parse("<think>a</think><answer>b</answer>")
        with pytest.raises(UnsupportedDimension):
            await judge_pairs(extract_pairs(trajectory, FaithDimension.THINK_ANSWER), MockJudgeBackend(FAST))


class TestHTTPBackend:
    CONFIG = JudgeBackendConfig(
        client_type="http",
        endpoint="http://judge.test/v1/judge",
        model="rm-14b",
        max_attempts=2,
        retry_backoff=0.0,
    )

    @pytest.mark.asyncio
    async def test_wire_contract(self):
        seen = []

        def handler(request: httpx.Request) -> httpx.Response:
            seen.append((request.headers.get("authorization"), json.loads(request.content)))
            return httpx.Response(200, json={"text": " Score: 1 "})

        backend = HTTPJudgeBackend(self.CONFIG, api_key="secret", transport=httpx.MockTransport(handler))
        try:
            verdicts = await judge_pairs(_pairs()[:1], backend)
        finally:
            await backend.aclose()

        assert verdicts[0].label == 1
        assert verdicts[0].raw == " Score: 1 "
        assert verdicts[0].backend == "http:rm-14b"
        header, body = seen[0]
        assert header == "Bearer secret"
        assert body["model"] == "rm-14b"
        assert body["temperature"] == 0.0
        assert body["prompt"].startswith("You are a helpful judge.")

    @pytest.mark.asyncio
    async def test_server_errors_exhaust_to_unparseable(self):
        calls = []

        def handler(request: httpx.Request) -> httpx.Response:
            calls.append(request)
            return httpx.Response(503, json={"error": "overloaded"})

        backend = HTTPJudgeBackend(self.CONFIG, transport=httpx.MockTransport(handler))
        try:
            verdicts = await judge_pairs(_pairs()[:1], backend)
        finally:
            await backend.aclose()

        assert len(calls) == 2
        assert verdicts[0].label == UNPARSEABLE
        assert verdicts[0].raw.startswith("judge failed after 2 attempts")

    @pytest.mark.asyncio
    async def test_missing_text_field(self):
        backend = HTTPJudgeBackend(
            self.CONFIG,
            transport=httpx.MockTransport(lambda request: httpx.Response(200, json={"label": 1})),
        )
        try:
            with pytest.raises(JudgeBackendError):
                await backend.complete(render_prompt(_pairs()[0]))
        finally:
            await backend.aclose()


class TestBackendConfig:
    def test_http_requires_endpoint(self):
        with pytest.raises(ConfigError):
            JudgeBackendConfig.build(client_type="http")

    def test_invalid_values(self):
        with pytest.raises(ConfigError):
            JudgeBackendConfig.build(parallelism=0)
        with pytest.raises(ConfigError):
            JudgeBackendConfig.build(max_attempts=0)
        with pytest.raises(ConfigError):
            JudgeBackendConfig.build(temperature=-0.1)

    def test_none_values_fall_back_to_defaults(self):
        config = JudgeBackendConfig.build(model=None, parallelism=4)
        assert config.model == JudgeBackendConfig().model
        assert config.parallelism == 4

    def test_factory(self):
        assert isinstance(create_judge_backend(JudgeBackendConfig()), MockJudgeBackend)
        with pytest.raises(ConfigError):
            create_judge_backend(JudgeBackendConfig(client_type="anthropic"))
