from cli.management.commands.phi import Command as PhiCommand


class Command(PhiCommand):
    help = f"{PhiCommand.help} Alias of phi."
