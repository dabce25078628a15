// Prompt templates, stored in their original {{ }} escaped form.

#include "paracook/harness/templates.hpp"

namespace paracook::harness::templates {

const char* const kIoPart1 = R"PROMPT(You are given the input map JSON, recipes, and orders, along with the Overcooked multi-agent parallel planning rules described below. Your goal is to generate a detailed action plan (Action List) for guiding each agent to complete dish preparation. The action plan must strictly follow the specified format and constraints.

Core Principles:
    Maximize Efficiency: Minimize the total time required to complete all orders. This is the most critical goal.
    Maximize Parallelism: Ensure multiple agents are working simultaneously whenever possible to reduce idle time.
    Ensure Accuracy: Adhere 100% to all action definitions, rules, and constraints outlined below.

Input Content:
    Map JSON: Describes kitchen layout, station coordinates, initial items, and agent positions.
    Recipes: Describes the preparation workflow and required ingredients for the dishes.
    Orders: Describe the dishes that need to be completed in order.

Output Requirements:
    For each agent, output an ordered action list (e.g., agent1, agent2).
    Each action is a dictionary containing action type and parameters.
    Please strictly follow the output standard JSON format action list. Do not add any additional explanations or content!

Output Format Example:
    {{
        "plan": {{
            "agent1": [
                {{"action": "MoveTo", "target": [x1, y1]}},
                {{"action": "Interact", "target": "station_name1"}},
                ...
            ],
            "agent2": [
                {{"action": "MoveTo", "target": [x2, y2]}},
                {{"action": "Process", "target": "station_name2"}},
                ...
            ],
            ...
           }}
    }}

Task:

{task}
)PROMPT";

const char* const kIoPart2 = R"PROMPT(Environment Rules and Constraints:

Agent Rules:
    No Collision: Agents do not consider collision boxes between each other; their movement paths and positions can overlap at any time.
    Single Item Hold: An agent can only hold one item at a time (e.g., an ingredient, a plate, a pot). Item exchange must be done via surfaces like tables; direct passing is not allowed. Cannot hold multiple ingredients or containers at once.
    Positioning: Agents can only stand on empty floor tiles; actions must be performed on adjacent empty ground to target stations; movement can only occur through empty ground. At any time, an agent's coordinates can never overlap with a station's coordinates.
    Agents can only interact or process with workstations that are adjacent in the four cardinal directions (up, down, left, right).

Environment & Item Rules:
    Station Exclusivity: Fixed stations like cutting boards or sinks can only be used by one agent at a time for a Process action.
    Ingredient Dispensing: Ingredients can only be obtained from designated dispensers. Each dispenser provides a specific type of ingredient. All types of ingredients can be directly held without the need for additional containers.
    Cooking Process:
        Stoves can only hold cookware (pots/pans), not ingredients directly.
        Cooking starts automatically once cookware is placed on a stove and contains ingredients. Picking it up pauses cooking; placing it back on any stove resumes it.
        Cooked food cannot be picked up by hand; it must be transferred in a container.
    Serving Process:
        All food items must be placed on a plate before being submitted at the serving window. The order in which the ingredients are placed on the plate is not important.
        Dishes must be served in the exact order specified in the Orders list.
    Plate Cycle:
        Dirty plates return to the dirty plate return station some time after a dish is served.
        A dirty plate cannot hold any items and must be washed at a sink to become a clean plate.
    Time Consumption:
        Move: 1 unit per tile
        Interact: {INTERACT_TIME} units
        Chopping: {PROCESS_CUT_TIME} units
        Pot Cooking: {PROCESS_POT_COOK_TIME} units
        Pan Cooking: {PROCESS_PAN_COOK_TIME} units
        Washing Plates: {PROCESS_WASH_PLATE_TIME} units
        Dirty Plate Return: {RETURN_DIRTY_PLATE_TIME} units
)PROMPT";

const char* const kIoPart3 = R"PROMPT(Action Definitions:
    MoveTo(coordinate):
        format: {{"action": "MoveTo", "target": [x, y]}}
    Interact(target_name):
        format: {{"action": "Interact", "target": "station_name"}}
    Process(target_name):
        format: {{"action": "Process", "target": "station_name"}}
    Wait(duration):
        format: {{"action": "Wait", "duration": t}}
    Finish():
        format: {{"action": "Finish"}}

Suggestions:
    Tasks must be reasonably allocated to achieve multi-agent parallel collaboration and minimize total time consumption.
    Action sequence must completely cover the entire process from raw material acquisition, processing, assembly to serving.
    Always notice the timepoint when each action starts and ends to ensure no conflicts in agent actions and get the most efficient plan.
)PROMPT";

const char* const kCotPart1 = R"PROMPT(You are given the input map JSON, recipes, and orders, along with the Overcooked multi-agent parallel planning rules described below. Your goal is to generate a **step-by-step reasoning process** (Chain-of-Thought, CoT) that leads to a detailed action plan for guiding each agent to complete dish preparation. The reasoning must explicitly explain the allocation of subtasks, parallel coordination, and timing decisions. 

Core Principles:
    Maximize Efficiency: Minimize the total time required to complete all orders. This is the most critical goal.
    Maximize Parallelism: Ensure multiple agents are working simultaneously whenever possible to reduce idle time.
    Ensure Accuracy: Adhere 100% to all action definitions, rules, and constraints outlined below.

Input Content:
    Map JSON: Describes kitchen layout, station coordinates, initial items, and agent positions.
    Recipes: Describes the preparation workflow and required ingredients for the dishes.
    Orders: Describe the dishes that need to be completed in order.

Output Requirements:
    For each agent, output an ordered action list alongside the CoT reasoning steps.
    Each step should include: reasoning about which subtask to execute, dependencies, and timing considerations.
    Each action is a dictionary containing action type and parameters.
    Please strictly follow the output standard JSON format for action lists and reasoning steps. Do not add any additional explanations outside of the CoT reasoning.

Output Format Example:
    {{
        "CoT": [
            "Step 1: Agent1 moves to ingredient dispenser to pick up tomato, reasoning: starting first ingredient to minimize idle time",
            "Step 2: Agent2 moves to counter to prepare plate, reasoning: parallel work to maximize efficiency",
            ...
        ],
        "plan": {{
            "agent1": [
                {{"action": "MoveTo", "target": [x1, y1]}},
                {{"action": "Interact", "target": "station_name1"}},
                ...
            ],
            "agent2": [
                {{"action": "MoveTo", "target": [x2, y2]}},
                {{"action": "Process", "target": "station_name2"}},
                ...
            ],
            ...
           }}
    }}

Task:

{task}
)PROMPT";

const char* const kCotPart2 = R"PROMPT(Environment Rules and Constraints:

Agent Rules:
    No Collision: Agents do not consider collision boxes between each other; movement paths and positions can overlap.
    Single Item Hold: Agents can only hold one item at a time. Exchanges must be done via surfaces; direct passing is not allowed.
    Positioning: Agents can only stand on empty floor tiles; movement can only occur through empty ground; coordinates cannot overlap with stations.
    Interactions: Only with adjacent workstations in four cardinal directions.

Environment & Item Rules:
    Station Exclusivity: Fixed stations can only be used by one agent at a time.
    Ingredient Dispensing: Ingredients obtained only from designated dispensers.
    Cooking Process: Stoves hold cookware, start automatically when ingredients are inside; cooked food must be transferred in a container.
    Serving Process: Food must be plated before submission; served in order of Orders list.
    Plate Cycle: Dirty plates return to the dirty plate return station; washed at a sink to become clean.
    Time Costs:
        Move: 1 unit per tile
        Interact: {INTERACT_TIME} units
        Chopping: {PROCESS_CUT_TIME} units
        Pot Cooking: {PROCESS_POT_COOK_TIME} units
        Pan Cooking: {PROCESS_PAN_COOK_TIME} units
        Washing Plates: {PROCESS_WASH_PLATE_TIME} units
        Dirty Plate Return: {RETURN_DIRTY_PLATE_TIME} units

Action Definitions:
    MoveTo(coordinate):
        format: {{"action": "MoveTo", "target": [x, y]}}
    Interact(target_name):
        format: {{"action": "Interact", "target": "station_name"}}
    Process(target_name):
        format: {{"action": "Process", "target": "station_name"}}
    Wait(duration):
        format: {{"action": "Wait", "duration": t}}
    Finish():
        format: {{"action": "Finish"}}

Suggestions:
    Tasks must be reasonably allocated to achieve multi-agent parallel collaboration and minimize total time consumption.
    Action sequence must completely cover the entire process from raw material acquisition, processing, assembly to serving.
    Always notice the timepoint when each action starts and ends to ensure no conflicts in agent actions and get the most efficient plan.
)PROMPT";

}  // namespace paracook::harness::templates
