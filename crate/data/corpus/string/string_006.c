/* count words in a line */
int main()
{
    char line[2000];
    int k, words = 0, state = 0;
    fgets(line, sizeof(line), stdin);
    for (k = 0; line[k] != '\0'; k++) {
        if (line[k] == ' ' || line[k] == '\n' || line[k] == '\t')
            state = 0;
        else if (!state) {
            state = 1;
            words++;
        }
    }
    printf("%d\n", words);
    return 0;
}
