// convert to upper case
int main()
{
    char word[300];
    int i;
    scanf("%s", word);
    for (i = 0; word[i] != '\0'; i++) {
        if (word[i] >= 'a' && word[i] <= 'z')
            word[i] -= 32;
        else if (word[i] >= 'A' && word[i] <= 'Z')
            word[i] += 32;
    }
    printf("%s\n", word);
    return 0;
}
