#!/usr/bin/env python3
"""Emit the bundled data files: corpus, taxonomy, operator lexicon, stop tokens.

The corpus is a hand-built set of CCG derivations exercising every operator
profile, site kind and skip path the generator knows about. The combinators
below enforce the same category discipline the C++ loader re-validates, so a
mistake here fails fast at build time rather than at load time.
"""

import json
import os
import sys

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

# --------------------------------------------------------------------------
# categories


def parse_cat(s):
    """Parse bracketed category notation, left-associative like the loader."""
    pos = 0

    def prim():
        nonlocal pos
        if s[pos] == "(":
            pos += 1
            c = expr()
            assert s[pos] == ")", s
            pos += 1
            return c
        j = pos
        while j < len(s) and s[j].isalpha():
            j += 1
        name = s[pos:j]
        assert name in ("S", "NP", "N", "PP"), f"bad atom in {s!r}"
        pos = j
        feat = ""
        if pos < len(s) and s[pos] == "[":
            k = s.index("]", pos)
            feat = s[pos + 1 : k]
            pos = k + 1
        return ("a", name, feat)

    def expr():
        nonlocal pos
        left = prim()
        while pos < len(s) and s[pos] in "/\\":
            sl = s[pos]
            pos += 1
            left = ("f", left, sl, prim())
        return left

    c = expr()
    assert pos == len(s), f"trailing junk in {s!r}"
    return c


def canon(c):
    """Canonical string for a parsed category (functional parts bracketed)."""
    if isinstance(c, str):
        c = parse_cat(c)
    if c[0] == "a":
        return c[1] + (f"[{c[2]}]" if c[2] else "")

    def wrap(x):
        return canon(x) if x[0] == "a" else "(" + canon(x) + ")"

    return wrap(c[1]) + c[2] + wrap(c[3])


# --------------------------------------------------------------------------
# derivation nodes


def leaf(token, lemma, pos, semtag, cat, sense=None):
    node = {"token": token, "lemma": lemma, "pos": pos, "semtag": semtag, "cat": canon(cat)}
    if sense is not None:
        assert sense.split(".")[-2] == pos, f"sense {sense} vs pos {pos}"
        node["sense"] = sense
    return node


def fa(functor, argument):
    fc = parse_cat(functor["cat"])
    assert fc[0] == "f" and fc[2] == "/", f"fa functor is not X/Y: {functor['cat']}"
    assert canon(fc[3]) == canon(argument["cat"]), (
        f"fa mismatch: {functor['cat']} applied to {argument['cat']}"
    )
    return {"rule": "fa", "cat": canon(fc[1]), "children": [functor, argument]}


def ba(argument, functor):
    fc = parse_cat(functor["cat"])
    assert fc[0] == "f" and fc[2] == "\\", f"ba functor is not X\\Y: {functor['cat']}"
    assert canon(fc[3]) == canon(argument["cat"]), (
        f"ba mismatch: {functor['cat']} applied to {argument['cat']}"
    )
    return {"rule": "ba", "cat": canon(fc[1]), "children": [argument, functor]}


def unary(cat, child):
    return {"rule": "unary", "cat": canon(cat), "children": [child]}


# --------------------------------------------------------------------------
# leaf shorthands

VP = r"S\NP"


def det(token, semtag, nnode, lemma=None):
    return fa(leaf(token, lemma or token.lower(), "x", semtag, "NP/N"), nnode)


def the(nnode, token="the"):
    return det(token, "DEF", nnode, lemma="the")


def his(nnode):
    return det("his", "DEF", nnode)


def noun(token, sense=None, lemma=None):
    return leaf(token, lemma or token, "n", "CON", "N", sense)


def name(token):
    return leaf(token, token, "n", "PER", "NP")


def iv(token, sense=None, lemma=None):
    return leaf(token, lemma or token, "v", "EXG", VP, sense)


def tv(token, sense=None, lemma=None):
    return leaf(token, lemma or token, "v", "EXG", f"({VP})/NP", sense)


def aux(token, semtag):
    return leaf(token, token, "x", semtag, f"({VP})/({VP})")


def adj(token, sense=None):
    return leaf(token, token, "a", "IST", "N/N", sense)


def pred_adj(token):
    return leaf(token, token, "a", "IST", VP)


def adv_pre(token):
    return leaf(token, token, "r", "REL", f"({VP})/({VP})")


def adv_post(token):
    return leaf(token, token, "r", "REL", f"({VP})\\({VP})")


def pp_vp(prep, np):
    """VP-attached prepositional phrase."""
    return fa(leaf(prep, prep, "x", "REL", f"(({VP})\\({VP}))/NP"), np)


def pp_n(prep, np):
    """Noun-attached prepositional phrase."""
    return fa(leaf(prep, prep, "x", "REL", r"(N\N)/NP"), np)


def neg_vp(token, vp, lemma=None):
    return fa(leaf(token, lemma or token, "x", "NEG", f"({VP})/({VP})"), vp)


def coord_vp(word, semtag, left_vp, right_vp):
    c = leaf(word, word, "x", semtag, f"(({VP})\\({VP}))/({VP})")
    return ba(left_vp, fa(c, right_vp))


def coord_n(word, semtag, left_n, right_n):
    c = leaf(word, word, "x", semtag, r"(N\N)/N")
    return ba(left_n, fa(c, right_n))


def coord_np(word, semtag, left_np, right_np):
    c = leaf(word, word, "x", semtag, r"(NP\NP)/NP")
    return ba(left_np, fa(c, right_np))


def bare(nnode):
    return unary("NP", nnode)


def clause(subj, vp):
    return ba(subj, vp)


def cond(token, s1, s2, lemma=None):
    c = leaf(token, lemma or token.lower(), "x", "IMP", "(S/S)/S")
    return fa(fa(c, s1), s2)


def theres(np, token="There's"):
    return fa(leaf(token, "there's", "x", "EXS", "S/NP"), np)


def sentence(sid, tier, root):
    return {"id": sid, "tier": tier, "root": root}


# --------------------------------------------------------------------------
# operator lexicon

LEXICON = [
    {"lemma": "all", "semtag": "AND", "arity": 2, "args": ["down", "up"]},
    {"lemma": "every", "semtag": "AND", "arity": 2, "args": ["down", "up"]},
    {"lemma": "each", "semtag": "AND", "arity": 2, "args": ["down", "up"]},
    {"lemma": "some", "semtag": "DIS", "arity": 2, "args": ["up", "up"]},
    {"lemma": "a", "semtag": "DIS", "arity": 2, "args": ["up", "up"]},
    {"lemma": "an", "semtag": "DIS", "arity": 2, "args": ["up", "up"]},
    {"lemma": "several", "semtag": "DIS", "arity": 2, "args": ["up", "up"]},
    {"lemma": "no", "semtag": "NEG", "arity": 2, "args": ["down", "down"]},
    {"lemma": "neither", "semtag": "NEG", "arity": 2, "args": ["down", "down"]},
    {"lemma": "not", "semtag": "NEG", "arity": 1, "args": ["down"]},
    {"lemma": "without", "semtag": "NEG", "arity": 1, "args": ["down"]},
    {"lemma": "both", "semtag": "DEF", "arity": 2, "args": ["flat", "up"]},
    {"lemma": "many", "semtag": "QUV", "arity": 2, "args": ["flat", "up"]},
    {"lemma": "few", "semtag": "QUV", "arity": 2, "args": ["flat", "down"]},
    {"lemma": "at most ten", "semtag": "QUV", "arity": 2, "args": ["down", "down"]},
    {"lemma": "at most two", "semtag": "QUV", "arity": 2, "args": ["down", "down"]},
    {"lemma": "at most three", "semtag": "QUV", "arity": 2, "args": ["down", "down"]},
    {"lemma": "if", "semtag": "IMP", "arity": 2, "args": ["down", "up"]},
    {"lemma": "when", "semtag": "IMP", "arity": 2, "args": ["down", "up"]},
    {"lemma": "unless", "semtag": "IMP", "arity": 2, "args": ["up", "up"]},
]


# --------------------------------------------------------------------------
# taxonomy: (sense, surface lemma, gloss, hypernyms)
#
# Every hypernym edge is audited for plurality: the target lemma must read
# grammatically in every sentence context where the source can be a site.

TAXONOMY = [
    # people
    ("person.n.01", "people", "a human being", []),
    ("boy.n.01", "boys", "a young male person", ["person.n.01"]),
    ("schoolboy.n.01", "schoolboys", "a boy attending school", ["boy.n.01"]),
    ("girl.n.01", "girls", "a young female person", ["person.n.01"]),
    ("schoolgirl.n.01", "schoolgirls", "a girl attending school", ["girl.n.01"]),
    ("kid.n.01", "kids", "a young person", ["person.n.01"]),
    ("foster_child.n.01", "foster_children", "a child raised by foster parents", ["kid.n.01"]),
    ("worker.n.01", "workers", "a person employed to earn money", ["person.n.01"]),
    ("employee.n.01", "employees", "a worker hired for wages", ["worker.n.01"]),
    ("student.n.01", "students", "a person enrolled to study", ["person.n.01"]),
    ("pupil.n.01", "pupils", "a young student taught at school", ["student.n.01"]),
    ("monk.n.01", "monks", "a man living under religious vows", ["person.n.01"]),
    ("guest.n.01", "guests", "a person invited to an event", ["person.n.01"]),
    ("relative.n.01", "relatives", "a person in the same family", ["person.n.01"]),
    ("sister.n.01", "sisters", "a female relative with the same parents", ["relative.n.01"]),
    ("manager.n.01", "managers", "a person who directs a business", ["person.n.01"]),
    ("musician.n.01", "musicians", "a person who performs music", ["person.n.01"]),
    ("violinist.n.01", "violinists", "a musician who plays the violin", ["musician.n.01"]),
    ("visitor.n.01", "visitors", "a person who pays a visit", []),
    ("tourist.n.01", "tourists", "a visitor traveling for pleasure", ["visitor.n.01"]),
    ("individual.n.01", "individual", "a single human being", []),
    ("stranger.n.01", "stranger", "an individual nobody knows", ["individual.n.01"]),
    ("professional.n.01", "professional", "a person qualified in a profession", []),
    ("lawyer.n.01", "lawyer", "a professional practicing law", ["professional.n.01"]),
    ("nurse.n.01", "nurse", "a professional caring for the sick", ["professional.n.01"]),
    ("official.n.01", "official", "a holder of an office", []),
    ("guard.n.01", "guard", "an official who watches over a place", ["official.n.01"]),
    ("aviator.n.01", "aviator", "an operator of aircraft", []),
    ("pilot.n.01", "pilot", "an aviator licensed to fly a plane", ["aviator.n.01"]),
    # animals
    ("animal.n.01", "animals", "a living creature that can move", []),
    ("dog.n.01", "dogs", "a domestic animal that barks", ["animal.n.01"]),
    ("puppy.n.01", "puppies", "a young dog", ["dog.n.01"]),
    ("horse.n.01", "horses", "a large hoofed animal used for riding", ["animal.n.01"]),
    ("mare.n.01", "mares", "a female horse", ["horse.n.01"]),
    ("bird.n.01", "birds", "a feathered animal that lays eggs", ["animal.n.01"]),
    ("swallow.n.01", "swallows", "a small migratory bird with a forked tail", ["bird.n.01"]),
    ("songbird.n.01", "songbird", "a bird with a musical call", []),
    ("sparrow.n.01", "sparrow", "a small brownish songbird", ["songbird.n.01"]),
    ("reptile.n.01", "reptiles", "a cold-blooded scaly animal", ["animal.n.01"]),
    ("snake.n.01", "snakes", "a legless reptile", ["reptile.n.01"]),
    ("cobra.n.01", "cobras", "a venomous hooded snake", ["snake.n.01"]),
    ("mammal.n.01", "mammals", "a warm-blooded animal that nurses its young", ["animal.n.01"]),
    ("bat.n.02", "bats", "nocturnal flying mammals with membranous wings", ["mammal.n.01"]),
    ("creature.n.01", "creature", "a living being", []),
    ("spider.n.01", "spider", "an eight-legged creature that spins webs", ["creature.n.01"]),
    # plants
    ("plant.n.01", "plants", "a living organism that grows in soil", []),
    ("tree.n.01", "trees", "a tall woody plant", ["plant.n.01"]),
    ("oak.n.01", "oaks", "a hardwood tree bearing acorns", ["tree.n.01"]),
    ("white_oak.n.01", "white_oaks", "an oak with pale bark", ["oak.n.01"]),
    ("flower.n.01", "flowers", "a plant grown for its blossoms", ["plant.n.01"]),
    ("mexican_sunflower.n.01", "Mexican_sunflowers", "a tall flower with orange blooms",
     ["flower.n.01"]),
    ("crop.n.01", "crops", "a plant cultivated for harvest", ["plant.n.01"]),
    # water and places
    ("waterway.n.01", "waterways", "navigable bodies of flowing water", []),
    ("river.n.01", "rivers", "large natural waterways that drain the land", ["waterway.n.01"]),
    ("stream.n.01", "stream", "a flow of water in a channel", []),
    ("river.n.02", "river", "a wide stream of water with a bank on each side", ["stream.n.01"]),
    ("area.n.01", "area", "a particular extent of space", []),
    ("garden.n.01", "garden", "an area where plants are cultivated", ["area.n.01"]),
    ("yard.n.01", "yard", "an area next to a house", ["area.n.01"]),
    ("park.n.01", "park", "a public area kept for recreation", ["area.n.01"]),
    ("field.n.01", "field", "an open area of cleared land", ["area.n.01"]),
    ("valley.n.01", "valley", "a low area between hills", ["area.n.01"]),
    ("lake.n.01", "lake", "a large inland body of standing water", ["area.n.01"]),
    ("slope.n.01", "slope", "ground that forms an incline", []),
    ("bank.n.01", "bank", "sloping land beside a river or lake", ["slope.n.01"]),
    ("institution.n.01", "institution", "an established organization", []),
    ("bank.n.02", "bank", "a financial institution that accepts deposits and lends money",
     ["institution.n.01"]),
    ("barrier.n.01", "barrier", "a structure that blocks passage", []),
    ("fence.n.01", "fence", "a barrier of posts and boards", ["barrier.n.01"]),
    ("wall.n.01", "wall", "an upright barrier of masonry", ["barrier.n.01"]),
    ("gate.n.01", "gate", "a hinged barrier across an opening", ["barrier.n.01"]),
    ("road.n.01", "road", "an open way for vehicles", []),
    ("street.n.01", "street", "a paved road in a town", ["road.n.01"]),
    ("alley.n.01", "alley", "a narrow street between buildings", ["street.n.01"]),
    ("facility.n.01", "facility", "something built to serve a purpose", []),
    ("water.n.01", "water", "a clear liquid supplied by a public facility", ["facility.n.01"]),
    ("station.n.01", "station", "a facility where vehicles take on passengers", ["facility.n.01"]),
    ("appliance.n.01", "appliance", "a machine used in the home", []),
    ("fridge.n.01", "fridge", "an appliance that keeps food cold", ["appliance.n.01"]),
    ("furniture.n.01", "furniture", "movable articles that equip a room", []),
    ("table.n.01", "table", "furniture with a flat top on legs", ["furniture.n.01"]),
    ("room.n.01", "room", "an enclosed part of a building", []),
    ("classroom.n.01", "classroom", "a room where lessons are taught", ["room.n.01"]),
    ("kitchen.n.01", "kitchen", "a room where food is cooked", ["room.n.01"]),
    ("cellar.n.01", "cellar", "a room below ground level", ["room.n.01"]),
    ("structure.n.01", "structure", "something constructed from parts", []),
    ("building.n.01", "building", "a structure with walls and a roof", ["structure.n.01"]),
    ("temple.n.01", "temple", "a building for worship", ["building.n.01"]),
    ("library.n.01", "library", "a building holding books for reading", ["building.n.01"]),
    ("barn.n.01", "barn", "a building that shelters livestock", ["building.n.01"]),
    ("castle.n.01", "castle", "a fortified building of the nobility", ["building.n.01"]),
    ("platform.n.01", "platform", "a raised level surface", []),
    ("stage.n.01", "stage", "a platform where performers appear", ["platform.n.01"]),
    ("surface.n.01", "surface", "the outside layer of something", []),
    ("floor.n.01", "floor", "the surface of a room walked on", ["surface.n.01"]),
    ("cavity.n.01", "cavity", "a hollow space inside something", []),
    ("cave.n.01", "cave", "a dark natural cavity underground", ["cavity.n.01"]),
    # food and drink
    ("food.n.01", "food", "anything eaten to sustain life", []),
    ("egg.n.01", "eggs", "food laid by hens in shells", ["food.n.01"]),
    ("bread.n.01", "bread", "food baked from flour dough", ["food.n.01"]),
    ("fruit.n.01", "fruit", "the sweet edible product of a plant", ["food.n.01"]),
    ("apple.n.01", "apple", "a round fruit with crisp flesh", ["fruit.n.01"]),
    ("beverage.n.01", "beverage", "a liquid suitable for drinking", []),
    ("liquor.n.01", "liquor", "a distilled alcoholic beverage", ["beverage.n.01"]),
    ("whisky.n.01", "whisky", "a liquor distilled from grain", ["liquor.n.01"]),
    ("milk.n.01", "milk", "a white beverage produced by cows", ["beverage.n.01"]),
    ("coffee.n.01", "coffee", "a dark beverage brewed from roasted beans", ["beverage.n.01"]),
    ("espresso.n.01", "espresso", "strong coffee brewed under pressure", ["coffee.n.01"]),
    # artifacts and works
    ("drama.n.01", "drama", "a work composed for the theater", []),
    ("tragedy.n.01", "tragedy", "a drama with an unhappy ending", ["drama.n.01"]),
    ("comedy.n.01", "comedy", "a drama meant to amuse", ["drama.n.01"]),
    ("document.n.01", "documents", "written records that convey information", []),
    ("letter.n.01", "letters", "written messages kept in an archive or mailed", ["document.n.01"]),
    ("letter.n.02", "letters", "characters of the alphabet", []),
    ("publication.n.01", "publications", "printed works offered for reading", []),
    ("book.n.01", "books", "printed publications bound between covers", ["publication.n.01"]),
    ("textbook.n.01", "textbooks", "books used for study in a course", ["book.n.01"]),
    ("agreement.n.01", "agreement", "a mutual arrangement between parties", []),
    ("contract.n.01", "contract", "a legally binding agreement", ["agreement.n.01"]),
    ("container.n.01", "containers", "objects that hold things", []),
    ("cup.n.01", "cups", "small open containers for drinking", ["container.n.01"]),
    ("vessel.n.01", "vessel", "an object used as a holder", []),
    ("basket.n.01", "basket", "a woven vessel with a handle", ["vessel.n.01"]),
    ("equipment.n.01", "equipment", "gear needed for an activity", []),
    ("instrument.n.01", "instruments", "equipment used to produce music", ["equipment.n.01"]),
    ("violin.n.01", "violins", "stringed instruments played with a bow", ["instrument.n.01"]),
    ("device.n.01", "device", "an object made for a purpose", []),
    ("torch.n.01", "torch", "a portable device that gives light", ["device.n.01"]),
    ("vehicle.n.01", "vehicles", "conveyances that transport people or goods", []),
    ("car.n.01", "cars", "motor vehicles with four wheels", ["vehicle.n.01"]),
    ("taxi.n.01", "taxis", "cars hired with a driver", ["car.n.01"]),
    ("truck.n.01", "trucks", "motor vehicles built to carry loads", ["vehicle.n.01"]),
    ("tram.n.01", "trams", "rail vehicles that run on streets", ["vehicle.n.01"]),
    ("aircraft.n.01", "aircraft", "a machine that flies", []),
    ("plane.n.01", "plane", "a fixed-wing aircraft", ["aircraft.n.01"]),
    ("trip.n.01", "trip", "a journey to a place", []),
    ("flight.n.01", "flight", "a trip made by air", ["trip.n.01"]),
    ("event.n.01", "event", "something that happens at a time and place", []),
    ("ceremony.n.01", "ceremony", "a formal event performed by ritual", ["event.n.01"]),
    ("lecture.n.01", "lecture", "an event where a speaker teaches", ["event.n.01"]),
    ("garment.n.01", "garment", "an article of clothing", []),
    ("coat.n.01", "coat", "an outer garment with sleeves", ["garment.n.01"]),
    ("parka.n.01", "parka", "a hooded coat for cold weather", ["coat.n.01"]),
    ("wood.n.01", "wood", "the hard substance of trees", []),
    ("timber.n.01", "timber", "heavy wood cut for building", ["wood.n.01"]),
    ("currency.n.01", "currency", "the medium of exchange in use", []),
    ("money.n.01", "money", "cash deposited or spent", ["currency.n.01"]),
    ("club.n.01", "club", "a stout stick used as a tool or weapon", []),
    ("bat.n.01", "bat", "a wooden club used for hitting a ball", ["club.n.01"]),
    ("stone.n.01", "stones", "lumps of hard mineral matter", []),
    ("rock.n.01", "rocks", "stones lying on or under the ground", ["stone.n.01"]),
    ("signal.n.01", "signal", "a sign that conveys a warning", []),
    # verbs
    ("move.v.01", "moving", "changing place or position", []),
    ("dance.v.01", "dancing", "moving the body in rhythm to music", ["move.v.01"]),
    ("swim.v.01", "swimming", "moving through water using the limbs", ["move.v.01"]),
    ("run.v.01", "running", "moving fast on foot", ["move.v.01"]),
    ("fly.v.01", "flying", "moving through the air as birds and bats do", ["move.v.01"]),
    ("acquire.v.01", "acquired", "came to own something", []),
    ("buy.v.01", "bought", "acquired something for money", ["acquire.v.01"]),
    ("create.v.01", "created", "brought something into existence", []),
    ("write.v.01", "wrote", "created a text for readers", ["create.v.01"]),
    ("sign.v.01", "signed", "wrote a signature on a document", []),
    ("countersign.v.01", "countersigned", "signed a document already signed by another",
     ["sign.v.01"]),
    ("perform.v.01", "performing", "presenting an act before an audience", []),
    ("sing.v.01", "singing", "performing music with the voice", ["perform.v.01"]),
    ("hum.v.01", "humming", "singing with closed lips", ["sing.v.01"]),
    ("play.v.01", "playing", "engaging in a game or performing on an instrument",
     ["perform.v.01"]),
    ("utter.v.01", "uttering", "producing sounds with the voice", []),
    ("shout.v.01", "shouting", "uttering loud cries", ["utter.v.01"]),
    ("scream.v.01", "screaming", "shouting in a piercing voice", ["shout.v.01"]),
    ("cry.v.01", "crying", "uttering sobs and tears", ["utter.v.01"]),
    ("sob.v.01", "sobbing", "crying with gasping breaths", ["cry.v.01"]),
    ("consume.v.01", "consume", "take into the body", []),
    ("eat.v.01", "eat", "consume solid food", ["consume.v.01"]),
    ("devour.v.01", "devour", "eat greedily", ["eat.v.01"]),
    ("drink.v.01", "drink", "consume a liquid", ["consume.v.01"]),
    ("sip.v.01", "sip", "drink in small mouthfuls", ["drink.v.01"]),
    ("exchange.v.01", "exchanged", "gave one thing for another", []),
    ("sell.v.01", "sold", "exchanged goods for money", ["exchange.v.01"]),
    ("exit.v.01", "exit", "go out of a place", []),
    ("leave.v.01", "leave", "exit and go away from", ["exit.v.01"]),
    ("end.v.01", "ended", "brought to a close", []),
    ("cancel.v.01", "canceled", "ended a planned event", ["end.v.01"]),
    ("clean.v.01", "cleaned", "freed something from dirt", []),
    ("wash.v.01", "washed", "cleaned with water", ["clean.v.01"]),
    ("cook.v.01", "cooking", "preparing food with heat", []),
    ("bake.v.01", "baking", "cooking in an oven", ["cook.v.01"]),
    ("transport.v.01", "transported", "moved goods or people along", []),
    ("carry.v.01", "carried", "transported while holding", ["transport.v.01"]),
    ("pull.v.01", "pulling", "applying force to draw something", []),
    ("haul.v.01", "hauling", "pulling something heavy across a distance", ["pull.v.01"]),
    ("examine.v.01", "examined", "looked at closely", []),
    ("check.v.01", "checked", "examined for correctness", ["examine.v.01"]),
    ("gather.v.01", "gather", "bring together in one place", []),
    ("harvest.v.01", "harvest", "gather a ripened crop", ["gather.v.01"]),
    ("rest.v.01", "resting", "staying inactive to recover", []),
    ("sleep.v.01", "sleeping", "resting with suspended consciousness", ["rest.v.01"]),
    ("read.v.01", "reading", "looking at text and taking in its meaning", []),
    ("come.v.01", "came", "moved toward a place", []),
    ("arrive.v.01", "arrived", "came to a destination", ["come.v.01"]),
    ("grow.v.01", "growing", "increasing in size by natural development", []),
    ("bark.v.01", "barked", "made the sharp cry of a dog", []),
    ("yap.v.01", "yapped", "barked shrilly", ["bark.v.01"]),
    ("bark.v.02", "barking", "making sharp cries as a dog does", []),
    ("yelp.v.01", "yelping", "barking in sharp yips", ["bark.v.02"]),
    ("cover.v.01", "cover", "spread over a surface", []),
    ("flood.v.01", "flood", "cover with overflowing water", ["cover.v.01"]),
    ("end.v.02", "ends", "comes to a close", []),
    ("stop.v.01", "stops", "ends its motion or activity", ["end.v.02"]),
    ("halt.v.01", "halts", "stops abruptly", ["stop.v.01"]),
    ("hide.v.01", "hiding", "keeping out of sight", []),
    ("lurk.v.01", "lurking", "hiding while lying in wait", ["hide.v.01"]),
    ("park.v.01", "parked", "left a vehicle standing in a spot", []),
    ("enter.v.01", "entered", "went into a place", []),
    ("put.v.01", "put", "place something somewhere", []),
    ("deposit.v.01", "deposited", "put money in a bank", ["put.v.01"]),
    # adjectives
    ("colored.a.01", "colored", "having a hue", []),
    ("red.a.01", "red", "of the color of blood", ["colored.a.01"]),
    ("crimson.a.01", "crimson", "of a deep purplish red", ["red.a.01"]),
    ("small.a.01", "small", "below average in size", []),
    ("tiny.a.01", "tiny", "extremely small", ["small.a.01"]),
]


STOP_TOKENS = """
a an the this that these those it they
is are was were be been being am
do does did will would might may can could shall should
of in on at for with to from by near over under across inside before after
and or if not no there when his her its their
""".split()


# --------------------------------------------------------------------------
# sentences


def build_corpus():
    s = []

    # -- gold sentences behind the documented walkthroughs ------------------
    s.append(sentence("g-dance-floor", "gold", clause(
        det("All", "AND", noun("kids", "kid.n.01")),
        ba(fa(aux("were", "PST"), iv("dancing", "dance.v.01")),
           pp_vp("on", the(noun("floor", "floor.n.01")))))))

    s.append(sentence("g-sunflower", "gold", clause(
        name("Tom"),
        ba(fa(tv("bought", "buy.v.01"),
              det("some", "DIS", noun("flowers", "flower.n.01"))),
           pp_vp("for", name("Mary"))))))

    s.append(sentence("g-whisky", "gold", cond(
        "If",
        theres(det("no", "NEG", noun("water,", "water.n.01", lemma="water")),
               token="there's"),
        theres(det("no", "NEG", noun("whisky", "whisky.n.01")), token="there's"))))

    s.append(sentence("g-drama", "gold", clause(
        name("Shakespeare"),
        fa(tv("wrote", "write.v.01"),
           det("both", "DEF",
               coord_n("and", "AND",
                       noun("tragedy", "tragedy.n.01"),
                       noun("comedy", "comedy.n.01")))))))

    s.append(sentence("g-glasses", "gold", clause(
        name("Tom"),
        coord_vp("and", "AND",
                 fa(tv("removed"), his(noun("glasses"))),
                 fa(tv("rubbed"), his(noun("eyes")))))))

    s.append(sentence("g-barren", "gold", clause(
        the(noun("trees"), token="The"),
        coord_vp("or", "DIS",
                 fa(aux("are", "NOW"), pred_adj("barren")),
                 fa(tv("bear"),
                    fa(leaf("only", "only", "r", "REL", "NP/NP"),
                       bare(fa(adj("small"), noun("fruit")))))))))

    # -- gold sentences matching the marked walkthrough examples ------------
    s.append(sentence("p-boys-some", "gold", clause(
        det("Some", "DIS", noun("boys", "boy.n.01")),
        ba(fa(aux("are", "NOW"),
              fa(adv_pre("happily"), iv("dancing", "dance.v.01"))),
           pp_vp("in", the(noun("garden", "garden.n.01")))))))

    s.append(sentence("p-boys-no", "gold", clause(
        det("No", "NEG", noun("boys", "boy.n.01")),
        ba(fa(aux("are", "NOW"),
              fa(adv_pre("happily"), iv("dancing", "dance.v.01"))),
           pp_vp("in", the(noun("garden", "garden.n.01")))))))

    s.append(sentence("p-party", "gold", cond(
        "If",
        clause(det("no", "NEG", noun("boys", "boy.n.01")),
               fa(aux("are", "NOW"), iv("dancing,", "dance.v.01", lemma="dancing"))),
        clause(the(noun("party")),
               fa(aux("might", "POS"),
                  fa(aux("be", "NOW"), iv("canceled", "cancel.v.01")))))))

    # -- more gold sentences over the crisp operator fragment ---------------
    s.append(sentence("c-alarm", "gold", cond(
        "If",
        clause(the(noun("alarm")), iv("sounds,", lemma="sounds")),
        clause(det("all", "AND", noun("workers", "worker.n.01")),
               fa(tv("leave", "leave.v.01"),
                  the(noun("building", "building.n.01")))))))

    s.append(sentence("c-no-girls", "gold", clause(
        det("No", "NEG", noun("girls", "girl.n.01")),
        ba(coord_vp("or", "DIS",
                    fa(aux("were", "PST"), iv("shouting", "shout.v.01")),
                    iv("crying", "cry.v.01")),
           pp_vp("in", the(noun("classroom", "classroom.n.01")))))))

    s.append(sentence("c-not-apple", "gold", clause(
        name("Tom"),
        fa(aux("did", "PST"),
           neg_vp("not",
                  fa(tv("eat", "eat.v.01"),
                     the(fa(adj("red", "red.a.01"), noun("apple", "apple.n.01")))))))))

    s.append(sentence("c-atmost-dogs", "gold", clause(
        det("At most ten", "QUV", noun("dogs", "dog.n.01"), lemma="at most ten"),
        ba(iv("barked", "bark.v.01"),
           pp_vp("in", the(noun("yard", "yard.n.01")))))))

    s.append(sentence("c-atmost-trucks", "gold", clause(
        det("At most two", "QUV", noun("trucks", "truck.n.01"), lemma="at most two"),
        fa(tv("entered", "enter.v.01"),
           the(fa(adj("narrow"), noun("street", "street.n.01")))))))

    s.append(sentence("c-atmost-guests", "gold", clause(
        det("At most three", "QUV", noun("guests", "guest.n.01"), lemma="at most three"),
        ba(iv("arrived", "arrive.v.01"),
           pp_vp("before", the(noun("ceremony", "ceremony.n.01")))))))

    s.append(sentence("c-both-managers", "gold", clause(
        det("Both", "DEF", noun("managers", "manager.n.01")),
        fa(tv("signed", "sign.v.01"),
           the(fa(adj("long"), noun("contract", "contract.n.01")))))))

    s.append(sentence("c-both-sisters", "gold", clause(
        det("Both", "DEF", noun("sisters", "sister.n.01")),
        ba(fa(aux("were", "PST"),
              fa(tv("baking", "bake.v.01"),
                 bare(fa(adj("fresh"), noun("bread", "bread.n.01"))))),
           pp_vp("in", the(noun("kitchen", "kitchen.n.01")))))))

    s.append(sentence("c-farmer-eggs", "gold", clause(
        the(noun("farmer"), token="The"),
        ba(fa(tv("sold", "sell.v.01"),
              det("some", "DIS", fa(adj("fresh"), noun("eggs", "egg.n.01")))),
           pp_vp("at", the(noun("market")))))))

    s.append(sentence("c-violinists", "gold", clause(
        det("All", "AND", noun("violinists", "violinist.n.01")),
        fa(tv("carried", "carry.v.01"),
           the(fa(adj("old"), noun("instruments", "instrument.n.01")))))))

    s.append(sentence("c-nurse", "gold", clause(
        det("Each", "AND", noun("nurse", "nurse.n.01")),
        fa(tv("washed", "wash.v.01"),
           the(fa(adj("dirty"), noun("cups", "cup.n.01")))))))

    s.append(sentence("c-guard", "gold", clause(
        det("Each", "AND", noun("guard", "guard.n.01")),
        fa(tv("carried", "carry.v.01"),
           the(fa(adj("heavy"), noun("torch", "torch.n.01")))))))

    s.append(sentence("c-sparrow", "gold", clause(
        det("A", "DIS", noun("sparrow", "sparrow.n.01")),
        ba(fa(aux("was", "PST"), iv("singing", "sing.v.01")),
           pp_vp("on", the(fa(adj("wooden"), noun("fence", "fence.n.01"))))))))

    s.append(sentence("c-milk", "gold", theres(
        det("no", "NEG",
            ba(noun("milk", "milk.n.01"),
               pp_n("in", the(fa(adj("old"), noun("fridge", "fridge.n.01")))))))))

    s.append(sentence("c-there-a", "gold", theres(
        det("a", "DIS",
            ba(noun("spider", "spider.n.01"),
               pp_n("in", the(fa(adj("dusty"), noun("cellar", "cellar.n.01")))))))))

    s.append(sentence("c-oaks", "gold", clause(
        det("All", "AND", noun("oaks", "oak.n.01")),
        ba(fa(aux("were", "PST"), iv("growing", "grow.v.01")),
           pp_vp("near", the(fa(adj("stone"), noun("wall", "wall.n.01"))))))))

    s.append(sentence("c-cats-dogs", "gold", clause(
        name("Tom"),
        ba(fa(tv("fed"),
              coord_np("and", "AND", the(noun("cats")), the(noun("dogs")))),
           pp_vp("in", the(noun("barn")))))))

    s.append(sentence("c-puppies", "gold", clause(
        det("Some", "DIS", noun("puppies", "puppy.n.01")),
        ba(fa(aux("were", "PST"), iv("sleeping", "sleep.v.01")),
           pp_vp("in", the(fa(adj("small", "small.a.01"),
                              noun("basket", "basket.n.01"))))))))

    s.append(sentence("c-no-cars", "gold", clause(
        det("No", "NEG", noun("cars", "car.n.01")),
        ba(fa(aux("were", "PST"), iv("parked", "park.v.01")),
           pp_vp("near", the(fa(adj("main"), noun("gate", "gate.n.01"))))))))

    s.append(sentence("c-if-rain", "gold", cond(
        "If",
        clause(the(noun("rain")), iv("stops,", "stop.v.01", lemma="stops")),
        clause(the(noun("farmers")),
               fa(tv("harvest", "harvest.v.01"), the(noun("crops", "crop.n.01")))))))

    s.append(sentence("c-if-snow", "gold", cond(
        "If",
        clause(the(noun("snow")), iv("melts,", lemma="melts")),
        clause(det("some", "DIS", noun("rivers", "river.n.01")),
               fa(tv("flood", "flood.v.01"), the(noun("valley", "valley.n.01")))))))

    s.append(sentence("c-clerk", "gold", clause(
        the(noun("clerk"), token="The"),
        fa(tv("signed", "sign.v.01"),
           det("some", "DIS", fa(adj("official"), noun("letters", "letter.n.01")))))))

    s.append(sentence("c-some-horses", "gold", clause(
        det("Some", "DIS", noun("horses", "horse.n.01")),
        ba(fa(aux("were", "PST"), iv("running", "run.v.01")),
           pp_vp("across", the(fa(adj("wide"), noun("field", "field.n.01"))))))))

    s.append(sentence("c-all-students", "gold", clause(
        det("All", "AND", noun("students", "student.n.01")),
        ba(fa(aux("were", "PST"),
              fa(tv("reading", "read.v.01"), bare(noun("books", "book.n.01")))),
           pp_vp("in", the(noun("library", "library.n.01")))))))

    s.append(sentence("c-no-birds", "gold", clause(
        det("No", "NEG", noun("birds", "bird.n.01")),
        ba(fa(aux("were", "PST"), iv("flying", "fly.v.01")),
           pp_vp("over", the(fa(adj("frozen"), noun("lake", "lake.n.01"))))))))

    s.append(sentence("c-some-kids-swim", "gold", clause(
        det("Some", "DIS", noun("kids", "kid.n.01")),
        ba(fa(aux("were", "PST"), iv("swimming", "swim.v.01")),
           pp_vp("in", the(fa(adj("cold"), noun("river", "river.n.02"))))))))

    s.append(sentence("c-dogs-stranger", "gold", clause(
        det("Some", "DIS", noun("dogs", "dog.n.01")),
        ba(fa(aux("were", "PST"), iv("barking", "bark.v.02")),
           pp_vp("at", the(fa(adj("tall"), noun("stranger", "stranger.n.01"))))))))

    s.append(sentence("c-no-guests", "gold", clause(
        det("No", "NEG", noun("guests", "guest.n.01")),
        ba(fa(aux("were", "PST"), iv("eating")),
           pp_vp("at", the(fa(adj("round"), noun("table", "table.n.01"))))))))

    s.append(sentence("c-every-pilot", "gold", clause(
        det("Every", "AND", noun("pilot", "pilot.n.01")),
        ba(fa(tv("checked", "check.v.01"),
              the(fa(adj("small", "small.a.01"), noun("plane", "plane.n.01")))),
           pp_vp("before", the(noun("flight", "flight.n.01")))))))

    s.append(sentence("c-some-monks", "gold", clause(
        det("Some", "DIS", noun("monks", "monk.n.01")),
        ba(fa(aux("were", "PST"), iv("humming", "hum.v.01")),
           pp_vp("in", the(fa(adj("quiet"), noun("temple", "temple.n.01"))))))))

    s.append(sentence("c-no-snakes", "gold", clause(
        det("No", "NEG", noun("snakes", "snake.n.01")),
        ba(fa(aux("were", "PST"), iv("hiding", "hide.v.01")),
           pp_vp("under", the(fa(adj("flat"), noun("rocks", "rock.n.01"))))))))

    s.append(sentence("c-trams", "gold", clause(
        det("All", "AND", noun("trams", "tram.n.01")),
        ba(iv("stop"),
           pp_vp("at", the(fa(adj("central"), noun("station", "station.n.01"))))))))

    s.append(sentence("c-not-coffee", "gold", clause(
        the(noun("manager"), token="The"),
        fa(aux("did", "PST"),
           neg_vp("not",
                  fa(tv("drink", "drink.v.01"),
                     the(fa(adj("strong"), noun("coffee", "coffee.n.01")))))))))

    # -- gold sentences with operators outside the crisp fragment -----------
    s.append(sentence("n-many", "gold", clause(
        det("Many", "QUV", noun("students", "student.n.01")),
        fa(tv("attended"),
           the(fa(adj("evening"), noun("lecture", "lecture.n.01")))))))

    s.append(sentence("n-few", "gold", clause(
        det("Few", "QUV", noun("tourists", "tourist.n.01")),
        fa(tv("visited"),
           the(fa(adj("ancient"), noun("castle", "castle.n.01")))))))

    s.append(sentence("n-several", "gold", clause(
        det("Several", "DIS", noun("musicians", "musician.n.01")),
        ba(fa(aux("were", "PST"),
              fa(tv("playing", "play.v.01"), bare(noun("violins", "violin.n.01")))),
           pp_vp("on", the(noun("stage", "stage.n.01")))))))

    s.append(sentence("n-when", "gold", cond(
        "When",
        clause(the(noun("bell")), iv("rings,", lemma="rings")),
        clause(det("all", "AND", noun("pupils", "pupil.n.01")),
               fa(tv("leave", "leave.v.01"),
                  the(noun("classroom", "classroom.n.01")))))))

    s.append(sentence("n-unless", "gold", cond(
        "Unless",
        clause(the(noun("rain")), iv("stops,", "stop.v.01", lemma="stops")),
        clause(the(noun("concert")),
               fa(aux("will", "FUT"),
                  fa(aux("be", "NOW"), iv("canceled", "cancel.v.01")))))))

    s.append(sentence("n-neither", "gold", clause(
        det("Neither", "NEG", noun("lawyer", "lawyer.n.01")),
        fa(tv("signed", "sign.v.01"),
           the(fa(adj("new"), noun("contract", "contract.n.01")))))))

    s.append(sentence("n-without", "gold", clause(
        name("Tom"),
        ba(fa(tv("left"), the(noun("house"))),
           fa(leaf("without", "without", "x", "NEG", f"(({VP})\\({VP}))/NP"),
              his(fa(adj("heavy"), noun("coat", "coat.n.01"))))))))

    # -- silver sentences: site senses left to gloss-overlap lookup ---------
    s.append(sentence("s-bank-river", "silver", clause(
        det("Some", "DIS", noun("boys")),
        ba(fa(aux("were", "PST"), iv("swimming")),
           pp_vp("near",
                 the(ba(fa(adj("steep"), noun("bank")),
                        pp_n("of", the(noun("river"))))))))))

    s.append(sentence("s-bank-money", "silver", clause(
        det("Some", "DIS", noun("workers")),
        ba(fa(tv("deposited"), bare(noun("money"))),
           pp_vp("at", the(fa(adj("local"), noun("bank"))))))))

    s.append(sentence("s-bat-club", "silver", clause(
        det("Some", "DIS", noun("kids")),
        ba(ba(fa(aux("were", "PST"), iv("playing")),
              pp_vp("with", the(fa(adj("wooden"), noun("bat"))))),
           pp_vp("in", the(noun("park")))))))

    s.append(sentence("s-bat-animal", "silver", clause(
        det("Some", "DIS", noun("bats")),
        ba(fa(aux("were", "PST"), iv("flying")),
           pp_vp("inside", the(fa(adj("dark"), noun("cave"))))))))

    s.append(sentence("s-letters", "silver", clause(
        det("Some", "DIS", noun("clerks")),
        ba(fa(aux("were", "PST"),
              fa(tv("reading"), bare(fa(adj("old"), noun("letters"))))),
           pp_vp("in", the(noun("archive")))))))

    s.append(sentence("s-horses", "silver", clause(
        det("Some", "DIS", noun("horses")),
        ba(fa(aux("were", "PST"),
              fa(tv("hauling"), bare(fa(adj("heavy"), noun("timber"))))),
           pp_vp("across", the(noun("bridge")))))))

    # -- sentences the selection step must reject ---------------------------
    s.append(sentence("x-short", "gold", clause(
        det("All", "AND", noun("dogs")),
        ba(iv("barked"), adv_post("loudly")))))

    s.append(sentence("x-noop", "gold", clause(
        name("Tom"),
        ba(ba(fa(tv("washed"), the(noun("dishes"))),
              pp_vp("in", the(noun("kitchen")))),
           adv_post("yesterday")))))

    return s


# --------------------------------------------------------------------------
# consistency checks


def surface(node):
    if "children" not in node:
        return [node["token"]]
    out = []
    for c in node["children"]:
        out.extend(surface(c))
    return out


def walk_leaves(node):
    if "children" not in node:
        yield node
        return
    for c in node["children"]:
        yield from walk_leaves(c)


def check(corpus):
    senses = {t[0] for t in TAXONOMY}
    assert len(senses) == len(TAXONOMY), "duplicate sense id"
    for sid, lemma, gloss, hyps in TAXONOMY:
        for h in hyps:
            assert h in senses, f"dangling hypernym {h} of {sid}"
    ids = set()
    lex = {(e["lemma"], e["semtag"]) for e in LEXICON}
    for sent in corpus:
        assert sent["id"] not in ids, f"duplicate id {sent['id']}"
        ids.add(sent["id"])
        for lf in walk_leaves(sent["root"]):
            if "sense" in lf:
                assert lf["sense"] in senses, (
                    f"{sent['id']}: leaf {lf['token']} has unknown sense {lf['sense']}"
                )
        n_leaves = len(surface(sent["root"]))
        triggered = any(
            (lf["lemma"].lower(), lf["semtag"]) in lex
            or (lf["semtag"] == "AND" and lf["lemma"].lower() == "and")
            or (lf["semtag"] == "DIS" and lf["lemma"].lower() == "or")
            for lf in walk_leaves(sent["root"])
        )
        selected = n_leaves > 5 and triggered
        should_skip = sent["id"].startswith("x-")
        assert selected != should_skip, (
            f"{sent['id']}: selected={selected} (leaves={n_leaves}, trigger={triggered})"
        )


# --------------------------------------------------------------------------


def main():
    corpus = build_corpus()
    check(corpus)
    os.makedirs(DATA_DIR, exist_ok=True)

    path = os.path.join(DATA_DIR, "corpus.jsonl")
    with open(path, "w") as f:
        for sent in corpus:
            f.write(json.dumps(sent, ensure_ascii=False) + "\n")
    print(f"wrote {path}: {len(corpus)} sentences")

    path = os.path.join(DATA_DIR, "taxonomy.jsonl")
    with open(path, "w") as f:
        for sid, lemma, gloss, hyps in TAXONOMY:
            entry = {
                "sense": sid,
                "lemma": lemma,
                "pos": sid.split(".")[-2],
                "gloss": gloss.split(),
                "hypernyms": hyps,
            }
            f.write(json.dumps(entry, ensure_ascii=False) + "\n")
    print(f"wrote {path}: {len(TAXONOMY)} senses")

    path = os.path.join(DATA_DIR, "operator_lexicon.json")
    with open(path, "w") as f:
        json.dump(LEXICON, f, indent=2, ensure_ascii=False)
        f.write("\n")
    print(f"wrote {path}: {len(LEXICON)} operators")

    path = os.path.join(DATA_DIR, "stopwords.txt")
    with open(path, "w") as f:
        f.write("\n".join(STOP_TOKENS) + "\n")
    print(f"wrote {path}: {len(STOP_TOKENS)} stop tokens")

    for sent in corpus:
        print(f"  {sent['id']}: {' '.join(surface(sent['root']))}")


if __name__ == "__main__":
    sys.exit(main())
