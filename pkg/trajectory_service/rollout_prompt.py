ROLLOUT_TEMPLATE = (
    "Answer the given question. "
    "You must conduct reasoning inside <think> and </think> first every time you get new information. "
    "After reasoning, if you find you lack some knowledge, you can call a search engine by "
    "<search> query </search>, and it will return the top searched results between "
    "<information> and </information>. "
    "You can search as many times as you want. "
    "If you find no further external knowledge needed, you can directly provide the answer inside "
    "<answer> and </answer> without detailed illustrations. For example, <answer> xxx </answer>. "
    "Question: {question}\n"
)


def render_rollout_prompt(question: str) -> str:
    """Instruction prompt that elicits think/search/information/answer rollouts"""
    return ROLLOUT_TEMPLATE.replace("{question}", question.strip())
